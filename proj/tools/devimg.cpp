// Development aid: prints generator images under basic twists.

#include <cstdio>

#include "mcg/stdcurves.hpp"
#include "mcg/twist.hpp"

using namespace mcg;

int main(int argc, char** argv) {
  int g = argc > 1 ? std::atoi(argv[1]) : 1;
  int n = argc > 2 ? std::atoi(argv[2]) : 1;
  Registry reg({g, n});
  Engine eng(reg);
  std::printf("rim: %s\n", eng.boundaryWord().str().c_str());
  int count = argc > 3 ? argc - 3 : 0;
  std::vector<std::string> names;
  if (count) {
    for (int i = 3; i < argc; ++i) names.push_back(argv[i]);
  } else {
    for (auto& [nm, idx] : reg.byName) names.push_back(nm);
  }
  for (const auto& nm : names) {
    int ci = reg.find(nm);
    if (ci < 0) continue;
    const Curve& c = reg.curve(ci);
    if (c.basic) {
      std::printf("curve %s word: %s\n", nm.c_str(),
                  reg.model.polyWord(c.geom.poly).str().c_str());
    }
    const Aut& t = eng.curveTwist(ci, +1);
    for (int k = 0; k < t.rank; ++k)
      std::printf("  t[%s](g%d) = %s\n", nm.c_str(), k, t.images[k].str().c_str());
    for (size_t j = 0; j < t.arcImages.size(); ++j)
      std::printf("  t[%s](arc%zu) = %s\n", nm.c_str(), j, t.arcImages[j].str().c_str());
    FreeWord rim = eng.boundaryWord();
    std::printf("  rim image: %s\n", t.apply(rim).str().c_str());
  }
  return 0;
}
