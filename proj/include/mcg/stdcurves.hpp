#pragma once

// Standard curve registry for Sigma_g^n.
//
// Chain layout (portal i = walls W_{2i-1}, W_{2i} at x = 2i-1, 2i units):
//   c_1      = tight loop around W_1
//   c_{2i}   = loop through portal i (enters W_{2i-1} left, exits W_{2i} right)
//   c_{2i+1} = dumbbell around W_{2i} and W_{2i+1}   (i = 1..g-1)
//   c_{2g+1} = tight loop around W_{2g}
// Interior holes sit inside c_3's right blob ("zone A", next to W_3; next to
// W_1 for g = 1) or in the far-left zone B. The chain-neighborhood boundary
// curves d, e (3-chain), a, b (5-chain), d', e' (chain c_5..c_{2g+1}) are
// traced from regular neighborhoods; daisy curves are traced band sums.
// Lane discipline: structural coordinates live on the milli grid (lay::mu),
// offsets and micro-lanes stay below half a milli, so distinct objects can
// never produce collinear overlaps.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcg/model.hpp"
#include "mcg/tracer.hpp"

namespace mcg {

struct Curve {
  std::string name;
  bool basic = true;
  CurveGeom geom;                          // basic only
  int base = -1;                           // derived only
  std::vector<std::pair<int, int>> conj;   // derived only: (curve, sign), leftmost acts last
  HomologyClass cls;
  bool nonsepCertified = false;
};

class Registry {
 public:
  SurfaceModel model;
  std::vector<Poly> genPolys;  // rank generators a_1,b_1,..,eps_j in basis order
  std::vector<Poly> arcPolys;  // n-1 boundary arcs
  Poly rimPoly;                // based boundary loop of component n
  std::vector<Curve> curves;
  std::map<std::string, int> byName;

  // sections1 configurations assembled at build time
  struct DaisyConfig {
    int alpha = -1, alphaPrime = -1, beta = -1;
    std::vector<int> petalHoles;  // boundary indices (n means the rim)
    std::vector<int> xCurves;
  };
  std::optional<DaisyConfig> cfgD, cfgE;

  explicit Registry(SurfaceSpec s, int zoneA = -1)
      : model(s, zoneA >= 0 ? zoneA : s.n - 1) {
    buildReference();
    buildCurves();
  }

  int find(const std::string& n) const {
    auto it = byName.find(n);
    return it == byName.end() ? -1 : it->second;
  }
  int require(const std::string& n) const {
    int i = find(n);
    if (i < 0) throw std::out_of_range("no curve named " + n);
    return i;
  }
  const Curve& curve(int i) const { return curves[i]; }
  const Curve& curve(const std::string& n) const { return curves[require(n)]; }

  int addBasic(const std::string& name, Poly poly, bool nonsepByConstruction = false) {
    Curve c;
    c.name = name;
    c.basic = true;
    if (!polyEmbedded(poly)) throw std::logic_error("curve not embedded: " + name);
    c.geom.poly = std::move(poly);
    c.geom.prepare(model);
    c.cls = model.polyClass(c.geom.poly);
    bool clsNonzero = false;
    for (int64_t v : c.cls) clsNonzero |= (v != 0);
    c.nonsepCertified = clsNonzero || nonsepByConstruction;
    curves.push_back(std::move(c));
    byName[name] = static_cast<int>(curves.size()) - 1;
    return static_cast<int>(curves.size()) - 1;
  }

  int addDerived(const std::string& name, int base, std::vector<std::pair<int, int>> conj) {
    Curve c;
    c.name = name;
    c.basic = false;
    c.base = base;
    c.conj = std::move(conj);
    c.cls = derivedClass(base, c.conj);
    c.nonsepCertified = curves[base].nonsepCertified;
    curves.push_back(std::move(c));
    byName[name] = static_cast<int>(curves.size()) - 1;
    return static_cast<int>(curves.size()) - 1;
  }

  // Derived curve Phi(base), deduplicated on (base, conjugator word).
  int derivedFor(int base, const std::vector<std::pair<int, int>>& conj) {
    if (conj.empty()) return base;
    auto key = std::make_pair(base, conj);
    auto it = derivedDedup_.find(key);
    if (it != derivedDedup_.end()) return it->second;
    std::string name = "im" + std::to_string(curves.size()) + "_" + curves[base].name;
    int idx = addDerived(name, base, conj);
    derivedDedup_[key] = idx;
    return idx;
  }

  HomologyClass curveClass(int i) const { return curves[i].cls; }

 private:
  using L = coord_t;
  std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> derivedDedup_;
  static constexpr coord_t m(coord_t v) { return lay::mu(v); }

  HomologyClass derivedClass(int base, const std::vector<std::pair<int, int>>& conj) const {
    HomologyClass v = curves[base].cls;
    // rightmost letter acts first; class of Phi(c) = M_Phi [c]
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
      IntMat t = transvection(model.spec, curves[it->first].cls, it->second);
      v = t.apply(v);
    }
    return v;
  }

  // --- reference system ----------------------------------------------------

  coord_t trunkX(int lane) const { return model.frameL + m(150) + 8 * lane; }
  coord_t hwyY(int lane) const { return m(2900) + 8 * lane; }

  // closed loop: trunk up, highway right, descend, [body], ascend, highway
  // back, trunk down. Body points run from the descent bottom to the ascent
  // bottom; descent and ascent lanes are bodyFront.x and bodyBack.x.
  Poly refLoop(int lane, const std::vector<Pt>& body) const {
    std::vector<Pt> pts;
    coord_t tx = trunkX(lane), hy = hwyY(lane);
    pts.push_back({tx, m(2)});
    pts.push_back({tx, hy});
    pts.push_back({body.front().x, hy});
    for (const Pt& p : body) pts.push_back(p);
    pts.push_back({body.back().x, hy - 4});
    pts.push_back({tx + 4, hy - 4});
    pts.push_back({tx + 4, m(2)});
    Poly p;
    p.closed = true;
    Strand s;
    s.pts = std::move(pts);
    s.pts.push_back(s.pts.front());
    p.strands.push_back(std::move(s));
    return p;
  }

  Poly refArc(int lane, const std::vector<Pt>& body) const {
    std::vector<Pt> pts;
    coord_t tx = trunkX(lane), hy = hwyY(lane);
    pts.push_back({tx, m(2)});
    pts.push_back({tx, hy});
    pts.push_back({body.front().x, hy});
    for (const Pt& p : body) pts.push_back(p);
    Poly p;
    p.closed = false;
    Strand s;
    s.pts = std::move(pts);
    p.strands.push_back(std::move(s));
    return p;
  }

  void buildReference() {
    const SurfaceSpec& s = model.spec;
    int lane = 0;
    genPolys.resize(s.rank());
    for (int i = 1; i <= s.g; ++i) {
      // a_i: through portal i at height 1100
      {
        coord_t wl = m(1000 * (2 * i - 1)), wr = m(1000 * (2 * i));
        coord_t h = m(1100);
        Poly p;
        p.closed = true;
        Strand st;
        int la = lane++;
        coord_t tx = trunkX(la), hy = hwyY(la);
        st.pts = {{wr, h},       {wr + 4, h},  {wr + 4, hy - 4}, {tx + 4, hy - 4},
                  {tx + 4, m(2)}, {tx, m(2)},   {tx, hy},         {wl - 4, hy},
                  {wl - 4, h},    {wl, h}};
        p.strands.push_back(std::move(st));
        p.base = PolyPos{0, 5, 1};  // based at the bottom of the up-trunk
        genPolys[model.genA(i)] = p;
      }
      // b_i: keyhole around W_{2i-1}
      {
        coord_t w = m(1000 * (2 * i - 1));
        std::vector<Pt> body = {{w - 45 * 8, m(950)},      // descent bottom
                                {w + 45 * 8, m(950)},
                                {w + 45 * 8, m(1550)},
                                {w - 45 * 8 + 4, m(1550)},  // keyhole ascent lane
                                {w - 45 * 8 + 4, hwyY(lane) - 4}};
        // refLoop expects body.front().x as descent lane; adjust: start above
        std::vector<Pt> b2 = {{w - 45 * 8, m(950)},
                              {w + 45 * 8, m(950)},
                              {w + 45 * 8, m(1550)},
                              {w - 45 * 8 + 4, m(1550)}};
        genPolys[model.genB(i)] = refLoop(lane++, b2);
        (void)body;
      }
    }
    for (int j = 1; j <= s.n - 1; ++j) {
      const Wall& w = holeWall(j);
      coord_t lo = w.ybot - m(30), hi = w.ytop + m(24);
      std::vector<Pt> body = {{w.x - 18 * 8, lo},
                              {w.x + 18 * 8, lo},
                              {w.x + 18 * 8, hi},
                              {w.x - 18 * 8 + 4, hi}};
      genPolys[model.genE(j)] = refLoop(lane++, body);
    }
    // arcs gamma_j: end on the right face of the hole wall at mid height
    arcPolys.resize(s.arcs());
    for (int j = 1; j <= s.n - 1; ++j) {
      const Wall& w = holeWall(j);
      coord_t mid = (w.ybot + w.ytop) / 2;
      std::vector<Pt> body = {{w.x + 26 * 8, mid}, {w.x, mid}};
      arcPolys[j - 1] = refArc(lane++, body);
    }
    // rim loop: starts at its bottom-left corner, counterclockwise
    rimPoly = rectLoop({{model.frameL + m(60), m(100)},
                        {model.frameR - m(60), m(100)},
                        {model.frameR - m(60), m(3900)},
                        {model.frameL + m(60), m(3900)}});
  }

  const Wall& holeWall(int j) const {
    for (const Wall& w : model.walls)
      if (w.kind == Wall::Hole && w.holeIdx == j) return w;
    throw std::out_of_range("no hole wall");
  }

  // --- curves ---------------------------------------------------------------

  Poly throughCurve(int i) const {
    coord_t wl = m(1000 * (2 * i - 1)), wr = m(1000 * (2 * i));
    coord_t h = m(1250);
    Poly p;
    p.closed = true;
    Strand st;
    st.pts = {{wr, h},          {wr + 70 * 8, h},   {wr + 70 * 8, m(2500)},
              {wl - 70 * 8, m(2500)}, {wl - 70 * 8, h}, {wl, h}};
    p.strands.push_back(std::move(st));
    return p;
  }

  Poly dumbbell(coord_t xa, coord_t xb) const {
    coord_t ha = m(380), ybot = m(700), ctop = m(790), ytop = m(1800);
    return rectLoop({{xa - ha, ybot},
                     {xb + ha, ybot},
                     {xb + ha, ytop},
                     {xb - ha, ytop},
                     {xb - ha, ctop},
                     {xa + ha, ctop},
                     {xa + ha, ytop},
                     {xa - ha, ytop}});
  }

  Poly chainCurvePoly(int k) const {
    const int g = model.spec.g;
    if (k == 1) return boxLoop(m(800), m(900), m(1200), m(1600));
    if (k == 2 * g + 1) return boxLoop(m(2000 * g - 200), m(900), m(2000 * g + 200), m(1600));
    if (k % 2 == 0) return throughCurve(k / 2);
    int i = (k - 1) / 2;  // dumbbell around W_{2i}, W_{2i+1}
    return dumbbell(m(1000 * 2 * i), m(1000 * (2 * i + 1)));
  }

  Poly holeHug(int j) const {
    const Wall& w = holeWall(j);
    if (model.spec.g == 0 || j > model.nA)
      return boxLoop(w.x - m(60), w.ybot - m(60), w.x + m(60), w.ytop + m(60));
    return boxLoop(w.x - 28 * 8, w.ybot - 15 * 8, w.x + 28 * 8, w.ytop + 22 * 8);
  }

  Poly rimParallel() const {
    return rectLoop({{model.frameL + m(80), m(120)},
                     {model.frameR - m(80), m(120)},
                     {model.frameR - m(80), m(3880)},
                     {model.frameL + m(80), m(3880)}});
  }

  std::vector<Poly> chainTrace(int k0, int k1, coord_t eta) const {
    std::vector<Poly> keep;
    for (int k = k0; k <= k1; ++k) keep.push_back(chainCurvePoly(k));
    std::vector<const Poly*> loops;
    for (auto& p : keep) loops.push_back(&p);
    NbhdTracer tr(loops, {}, eta);
    return tr.components();
  }

  // Band sum of two disjoint curves through a connector arc: the neighborhood
  // of A u arc u B is a pants whose third boundary component (the one not
  // parallel to A or B) is the band sum.
  Poly bandSum(const Poly& A, const Poly& B, const Poly& connector, coord_t eta) const {
    NbhdTracer tr({&A, &B}, {&connector}, eta);
    auto comps = tr.components();
    if (comps.size() != 3)
      throw std::logic_error("bandSum: expected a pants, got " +
                             std::to_string(comps.size()) + " components");
    HomologyClass ca = model.polyClass(A), cb = model.polyClass(B);
    auto matches = [](const HomologyClass& x, const HomologyClass& y) {
      bool eq = true, neg = true;
      for (size_t i = 0; i < x.size(); ++i) {
        eq &= x[i] == y[i];
        neg &= x[i] == -y[i];
      }
      return eq || neg;
    };
    for (Poly& c : comps) {
      HomologyClass got = model.polyClass(c);
      if (!matches(got, ca) && !matches(got, cb)) return c;
    }
    throw std::logic_error("bandSum: no non-parallel component");
  }

  static HomologyClass addCls(HomologyClass a, const HomologyClass& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }

  void buildCurves() {
    const SurfaceSpec& s = model.spec;
    const int g = s.g;

    for (int k = 1; k <= 2 * g + 1; ++k)
      addBasic("c" + std::to_string(k), chainCurvePoly(k));
    for (int j = 1; j <= s.n - 1; ++j)
      addBasic("delta" + std::to_string(j), holeHug(j), true);
    addBasic("delta" + std::to_string(s.n), rimParallel(), s.n == 1 && g == 0);

    if (g >= 2) {
      auto de = chainTrace(1, 3, 313);
      if (de.size() != 2) throw std::logic_error("3-chain trace: expected 2 components");
      registerTracedPair(de, "d", "e");

      if (g >= 3) {
        auto ab = chainTrace(1, 5, 201);
        if (ab.size() != 2) throw std::logic_error("5-chain trace: expected 2 components");
        registerTracedPair(ab, "b", "a");
        auto dpep = chainTrace(5, 2 * g + 1, 241);
        if (dpep.size() != 2) throw std::logic_error("long-chain trace: 2 components expected");
        registerTracedPair(dpep, "dp", "ep");
      } else {
        // on Sigma_2^2 the 5-chain fills the surface: a, b are the boundary
        // parallels
        if (s.n == 2) {
          addDerived("a", require("delta1"), {});
          addDerived("b", require("delta2"), {});
        }
      }
      buildDaisyConfigs();
    }
    if (g == 1 && s.n == 2) {
      // 3-chain fills Sigma_1^2: d, e are the boundary parallels
      addDerived("d", require("delta1"), {});
      addDerived("e", require("delta2"), {});
    }
    if (g == 1) {
      addDerived("a", require("c1"), {});
      addDerived("b", require("c2"), {});
    }
    if (g == 0 && s.n >= 3) buildSphereDaisy();
  }

  // The two components of a chain-neighborhood boundary are negatives of each
  // other in homology, so the d/e assignment is pinned geometrically: the
  // inner component stays below the over-the-top strands of the through
  // curves, the outer silhouette follows them into the sky band. Which one is
  // "d" in the paper's sense is fixed by the relation suite (phi_12(c_3) = e).
  void registerTracedPair(std::vector<Poly>& pair, const char* inner, const char* outer) {
    auto maxY = [](const Poly& p) {
      coord_t y1 = INT64_MIN;
      for (const Strand& s : p.strands)
        for (const Pt& pt : s.pts) y1 = std::max(y1, pt.y);
      return y1;
    };
    int i0 = maxY(pair[0]) <= maxY(pair[1]) ? 0 : 1;
    addBasic(inner, std::move(pair[i0]), true);
    addBasic(outer, std::move(pair[1 - i0]), true);
  }

  void buildDaisyConfigs() {
    const SurfaceSpec& s = model.spec;
    const int g = s.g;
    if (model.nA >= 1) {
      DaisyConfig cfg;
      cfg.alpha = require("d");
      cfg.alphaPrime = (g == 2) ? require("c5") : require("dp");
      // beta: box around all zone-A holes
      const Wall& first = holeWall(1);
      const Wall& last = holeWall(model.nA);
      cfg.beta = addBasic("beta", boxLoop(first.x - 34 * 8, first.ybot - 34 * 8,
                                          last.x + 34 * 8, last.ytop + 41 * 8));
      // x_j is the band sum with hole l+1-j: the daisy product runs opposite
      // to the geometric petal order (pinned by the lantern orientation)
      for (int j = 1; j <= model.nA; ++j) {
        int hole = model.nA + 1 - j;
        cfg.petalHoles.push_back(hole);
        cfg.xCurves.push_back(
            daisyX("x" + std::to_string(j), require("d"), hole, 80 + 14 * hole));
      }
      cfgD = cfg;
    }
    if (g >= 3) {
      DaisyConfig cfg;
      cfg.alpha = require("e");
      cfg.alphaPrime = require("ep");
      // beta': everything except zone B and the rim
      cfg.beta = addBasic("beta_e", boxLoop(m(250), m(130), model.frameR - m(150), m(2750)));
      for (int t = 1; t <= model.nB; ++t) {
        int j = model.nA + (model.nB + 1 - t);
        cfg.petalHoles.push_back(j);
        cfg.xCurves.push_back(
            daisyX("xe" + std::to_string(t), require("e"), j, 60 + 14 * (model.nB + 1 - t)));
      }
      cfg.petalHoles.push_back(s.n);  // the rim is the last petal
      cfg.xCurves.push_back(daisyRimX("xe_rim", require("e"), 52));
      cfgE = cfg;
    }
  }

  // Connector from curve A to the hug of hole j. When the hug sits under a
  // horizontal run of A the connector is a straight drop; otherwise it climbs
  // from A's top to a sky lane and runs across (used by the e-side daisy whose
  // petals live in the far-left zone).
  int daisyX(const std::string& name, int aIdx, int holeJ, coord_t etaMicro) {
    const Poly& A = curves[aIdx].geom.poly;
    const Wall& hw = holeWall(holeJ);
    Poly hug = holeHug(holeJ);
    coord_t lx = hw.x + 10 * 8 + (holeJ % 2) * 4;  // distinct connector lanes
    coord_t bestY = INT64_MAX;
    coord_t hugTop = hw.ytop + ((model.spec.g == 0 || holeJ > model.nA) ? m(60) : 22 * 8);
    for (const Strand& st : A.strands)
      for (size_t i = 0; i + 1 < st.pts.size(); ++i) {
        const Pt &p = st.pts[i], &q = st.pts[i + 1];
        if (p.y != q.y) continue;
        if (std::min(p.x, q.x) < lx && lx < std::max(p.x, q.x) && p.y > hugTop)
          bestY = std::min(bestY, p.y);
      }
    Poly conn;
    conn.closed = false;
    Strand st;
    if (bestY != INT64_MAX) {
      st.pts = {{lx, bestY}, {lx, hugTop}};
    } else {
      // climb from A's topmost horizontal run to a sky lane, cross over, drop
      coord_t topY = INT64_MIN, ax = 0;
      for (const Strand& sA : A.strands)
        for (size_t i = 0; i + 1 < sA.pts.size(); ++i) {
          const Pt &p = sA.pts[i], &q = sA.pts[i + 1];
          if (p.y != q.y || p.y <= topY) continue;
          topY = p.y;
          ax = (p.x + q.x) / 2 + 8 * holeJ;
        }
      if (topY == INT64_MIN) throw std::logic_error("daisyX: no attachment run");
      coord_t sky = m(2570) + 16 * holeJ;
      st.pts = {{ax, topY}, {ax, sky}, {lx, sky}, {lx, hugTop}};
    }
    conn.strands.push_back(std::move(st));
    Poly x = bandSum(A, hug, conn, etaMicro);
    return addBasic(name, std::move(x), true);
  }

  int daisyRimX(const std::string& name, int aIdx, coord_t etaMicro) {
    const Poly& A = curves[aIdx].geom.poly;
    // a dedicated rim-parallel sits slightly inside the registered delta_n
    Poly rim2 = rectLoop({{model.frameL + m(95), m(140)},
                          {model.frameR - m(95), m(140)},
                          {model.frameR - m(95), m(3860)},
                          {model.frameL + m(95), m(3860)}});
    // straight climb from A's topmost horizontal run to rim2's top edge
    coord_t topY = INT64_MIN, ax = 0;
    for (const Strand& sA : A.strands)
      for (size_t i = 0; i + 1 < sA.pts.size(); ++i) {
        const Pt &p = sA.pts[i], &q = sA.pts[i + 1];
        if (p.y != q.y || p.y <= topY) continue;
        topY = p.y;
        ax = (p.x + q.x) / 2 + 4;
      }
    if (topY == INT64_MIN) throw std::logic_error("daisyRimX: no attachment run");
    Poly conn;
    conn.closed = false;
    Strand st;
    st.pts = {{ax, topY}, {ax, m(3860)}};
    conn.strands.push_back(std::move(st));
    Poly x = bandSum(A, rim2, conn, etaMicro);
    return addBasic(name, std::move(x), true);
  }


  void buildSphereDaisy() {
    // daisy on Sigma_0^{p+2}: central hole 1, petals 2..p+1 and the rim.
    // x-names are numbered so that the relation reads in the paper's order
    // t_{d0}^{p-1} t_{d1} .. t_{d_{p+1}} = t_{x1} .. t_{x_{p+1}}.
    const int p = model.spec.n - 2;
    Poly central = holeHug(1);
    for (int i = 1; i <= p; ++i) {
      const Wall& hw = holeWall(i + 1);
      Poly hug = holeHug(i + 1);
      const Wall& c0 = holeWall(1);
      coord_t laneY = m(1700) + 12 * 8 * i;
      Poly conn;
      conn.closed = false;
      Strand st;
      st.pts = {{c0.x + 8 * 8 * i, c0.ytop + m(60)},
                {c0.x + 8 * 8 * i, laneY},
                {hw.x + 8 * 8 * i, laneY},
                {hw.x + 8 * 8 * i, hw.ytop + m(60)}};
      conn.strands.push_back(std::move(st));
      Poly x = bandSum(central, hug, conn, 90 + 12 * i);
      addBasic("x" + std::to_string(p + 1 - i), std::move(x), true);
    }
    // x_{p+1}: central hole with the rim
    Poly rim2 = rectLoop({{model.frameL + m(95), m(140)},
                          {model.frameR - m(95), m(140)},
                          {model.frameR - m(95), m(3860)},
                          {model.frameL + m(95), m(3860)}});
    const Wall& c0 = holeWall(1);
    Poly conn;
    conn.closed = false;
    Strand st;
    st.pts = {{c0.x - 8 * 8, c0.ytop + m(60)}, {c0.x - 8 * 8, m(3860)}};
    conn.strands.push_back(std::move(st));
    Poly central2 = holeHug(1);
    Poly x = bandSum(central2, rim2, conn, 66);
    addBasic("x" + std::to_string(p + 1), std::move(x), true);  // rim petal stays last
  }
};

}  // namespace mcg
