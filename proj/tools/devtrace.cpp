// Development aid: dumps neighborhood-boundary traces for the 3-chain.

#include <cstdio>

#include "mcg/model.hpp"
#include "mcg/tracer.hpp"

using namespace mcg;

static Poly throughCurve(int i) {
  coord_t wl = lay::mu(1000 * (2 * i - 1)), wr = lay::mu(1000 * (2 * i));
  coord_t h = lay::mu(1250);
  Poly p;
  p.closed = true;
  Strand st;
  st.pts = {{wr, h},
            {wr + 70 * 8, h},
            {wr + 70 * 8, lay::mu(2500)},
            {wl - 70 * 8, lay::mu(2500)},
            {wl - 70 * 8, h},
            {wl, h}};
  p.strands.push_back(std::move(st));
  return p;
}

static void dump(const char* tag, const Poly& p) {
  std::printf("%s: %zu strands, closed=%d, embedded=%d\n", tag, p.strands.size(), p.closed,
              polyEmbedded(p));
  for (const Strand& s : p.strands) {
    std::printf("  strand:");
    for (const Pt& pt : s.pts) std::printf(" (%lld,%lld)", (long long)pt.x, (long long)pt.y);
    std::printf("\n");
  }
}

int main() {
  auto M = [](coord_t v) { return lay::mu(v); };
  Poly c1 = boxLoop(M(800), M(900), M(1200), M(1600));
  Poly c2 = throughCurve(1);
  Poly c3 = rectLoop({{M(1620), M(700)},
                      {M(3380), M(700)},
                      {M(3380), M(1800)},
                      {M(2620), M(1800)},
                      {M(2620), M(790)},
                      {M(2380), M(790)},
                      {M(2380), M(1800)},
                      {M(1620), M(1800)}});
  dump("c1", c1);
  dump("c2", c2);
  dump("c3", c3);
  NbhdTracer tr({&c1, &c2, &c3}, {}, 313);
  auto comps = tr.components();
  std::printf("components: %zu\n", comps.size());
  for (size_t i = 0; i < comps.size(); ++i) dump(("comp" + std::to_string(i)).c_str(), comps[i]);
  return 0;
}
