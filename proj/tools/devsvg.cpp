// Development aid: renders the slit model and selected curves to SVG.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "mcg/stdcurves.hpp"
#include "mcg/tracer.hpp"

using namespace mcg;

namespace {

double sx(coord_t v) { return v / 4000.0; }
double sy(coord_t v) { return 1100.0 - v / 4000.0; }

void emitPoly(std::ofstream& out, const Poly& p, const std::string& color, double width) {
  for (const Strand& s : p.strands) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
        << "\" points=\"";
    for (const Pt& pt : s.pts) out << sx(pt.x) << "," << sy(pt.y) << " ";
    out << "\"/>\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  int g = argc > 1 ? std::atoi(argv[1]) : 2;
  int n = argc > 2 ? std::atoi(argv[2]) : 2;
  SurfaceSpec spec{g, n};
  SurfaceModel model(spec, n - 1);

  std::ofstream out("model.svg");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << sx(model.frameL) - 20 << " 0 "
      << sx(model.frameR) - sx(model.frameL) + 40 << " 1150\">\n";
  // walls and cuts
  for (const Wall& w : model.walls) {
    out << "<line x1=\"" << sx(w.x) << "\" y1=\"" << sy(w.ybot) << "\" x2=\"" << sx(w.x)
        << "\" y2=\"" << sy(w.ytop) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    out << "<line x1=\"" << sx(w.x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(w.x) << "\" y2=\""
        << sy(w.ybot) << "\" stroke=\"#cccccc\" stroke-width=\"0.5\" stroke-dasharray=\"4\"/>\n";
  }

  const char* colors[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                          "#a65628", "#f781bf", "#17becf", "#666666", "#b2df8a",
                          "#fb9a99", "#cab2d6"};
  try {
    Registry reg(spec);
    int ci = 0;
    for (int k = 1; k <= 2 * g + 1 && argc <= 3; ++k)
      emitPoly(out, reg.curve("c" + std::to_string(k)).geom.poly, colors[ci++ % 12], 1.2);
    for (int j = 1; j < n && argc <= 3; ++j)
      emitPoly(out, reg.curve("delta" + std::to_string(j)).geom.poly, "#000088", 0.8);
    for (int a = 3; a < argc; ++a) {
      int idx = reg.find(argv[a]);
      if (idx >= 0 && reg.curve(idx).basic)
        emitPoly(out, reg.curve(idx).geom.poly, colors[(a - 3) % 12], 1.0);
      else
        std::printf("no basic curve %s\n", argv[a]);
    }
  } catch (const std::exception& e) {
    std::printf("registry failed: %s\n", e.what());
    // still draw the raw chain polylines and the traces
    std::vector<Poly> chain;
    Registry* dummy = nullptr;
    (void)dummy;
  }
  out << "</svg>\n";
  std::printf("wrote model.svg\n");
  return 0;
}
