#pragma once

// Exact planar geometry for the slit model of a surface.
//
// Every curve, arc and reference loop is a rectilinear polyline with integer
// coordinates (micro-units, 1.0 == 1'000'000). Portal transits split a curve
// into strands: a strand ends on a wall face and the next one resumes on the
// partner wall at the same height. All intersection tests are exact integer
// comparisons of axis-parallel segments; the coordinate layout guarantees
// every crossing is transversal and interior to both segments.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcg {

using coord_t = int64_t;
constexpr coord_t kUnit = 1'000'000;

struct Pt {
  coord_t x = 0, y = 0;
  bool operator==(const Pt&) const = default;
};

struct Seg {
  Pt a, b;
  bool horizontal() const { return a.y == b.y; }
  bool vertical() const { return a.x == b.x; }
  coord_t lo(bool useX) const { return std::min(useX ? a.x : a.y, useX ? b.x : b.y); }
  coord_t hi(bool useX) const { return std::max(useX ? a.x : a.y, useX ? b.x : b.y); }
  // unit direction, one of (+-1,0),(0,+-1)
  int dx() const { return (b.x > a.x) - (b.x < a.x); }
  int dy() const { return (b.y > a.y) - (b.y < a.y); }
};

// Position along a poly, ordered by traversal.
struct PolyPos {
  int strand = 0;
  int seg = 0;
  coord_t dist = 0;  // distance from segment start

  auto operator<=>(const PolyPos&) const = default;
};

// A maximal piece of a curve between portal transits (or the whole curve).
struct Strand {
  std::vector<Pt> pts;  // rectilinear; consecutive points differ in one axis

  size_t segCount() const { return pts.empty() ? 0 : pts.size() - 1; }
  Seg seg(size_t i) const { return Seg{pts[i], pts[i + 1]}; }
};

// Closed curve (cyclic strands; consecutive strands joined by portal
// transits, and for single-strand closed curves pts.front()==pts.back())
// or open arc (one strand, endpoints free / on a wall / on another curve).
struct Poly {
  std::vector<Strand> strands;
  bool closed = true;
  // Where reading starts for based words (closed loops only). Loops whose
  // strand begins away from the basepoint (they close through a portal) set
  // this to the position nearest the basepoint.
  PolyPos base{};

  size_t totalSegs() const {
    size_t n = 0;
    for (const Strand& s : strands) n += s.segCount();
    return n;
  }
};

struct Crossing {
  PolyPos onA, onB;
  int sign;  // +1 iff (dir A, dir B) is a positively oriented frame
};

namespace geo {

inline bool strictlyBetween(coord_t lo, coord_t v, coord_t hi) { return lo < v && v < hi; }

// Interior transversal intersection of two axis-parallel segments.
// Touching endpoints or collinear overlap are design errors and trip asserts.
inline bool segCross(const Seg& h, const Seg& v, Pt* out) {
  if (h.horizontal() && v.vertical()) {
    if (strictlyBetween(h.lo(true), v.a.x, h.hi(true)) &&
        strictlyBetween(v.lo(false), h.a.y, v.hi(false))) {
      *out = Pt{v.a.x, h.a.y};
      return true;
    }
    return false;
  }
  return false;
}

inline void crossingsOfSegs(const Seg& sa, const Seg& sb, std::vector<Pt>& out) {
  Pt p;
  if (sa.horizontal() && sb.vertical() && segCross(sa, sb, &p)) out.push_back(p);
  if (sa.vertical() && sb.horizontal() && segCross(sb, sa, &p)) out.push_back(p);
  // parallel segments never cross under the lane discipline (asserted below)
  if (sa.horizontal() == sb.horizontal()) {
    if (sa.horizontal()) {
      assert(!(sa.a.y == sb.a.y && std::max(sa.lo(true), sb.lo(true)) <
                                       std::min(sa.hi(true), sb.hi(true))));
    } else {
      assert(!(sa.a.x == sb.a.x && std::max(sa.lo(false), sb.lo(false)) <
                                       std::min(sa.hi(false), sb.hi(false))));
    }
  }
}

inline coord_t distAlong(const Seg& s, const Pt& p) {
  if (s.horizontal()) return s.dx() > 0 ? p.x - s.a.x : s.a.x - p.x;
  return s.dy() > 0 ? p.y - s.a.y : s.a.y - p.y;
}

inline int frameSign(const Seg& first, const Seg& second) {
  // det of the two unit directions
  return first.dx() * second.dy() - first.dy() * second.dx();
}

}  // namespace geo

// All transversal crossings of A with B, sorted along A.
inline std::vector<Crossing> polyCrossings(const Poly& A, const Poly& B) {
  std::vector<Crossing> res;
  for (int sa = 0; sa < static_cast<int>(A.strands.size()); ++sa)
    for (int ia = 0; ia < static_cast<int>(A.strands[sa].segCount()); ++ia) {
      Seg segA = A.strands[sa].seg(ia);
      for (int sb = 0; sb < static_cast<int>(B.strands.size()); ++sb)
        for (int ib = 0; ib < static_cast<int>(B.strands[sb].segCount()); ++ib) {
          Seg segB = B.strands[sb].seg(ib);
          std::vector<Pt> pts;
          geo::crossingsOfSegs(segA, segB, pts);
          for (const Pt& p : pts) {
            Crossing c;
            c.onA = PolyPos{sa, ia, geo::distAlong(segA, p)};
            c.onB = PolyPos{sb, ib, geo::distAlong(segB, p)};
            c.sign = geo::frameSign(segA, segB);
            res.push_back(c);
          }
        }
    }
  std::sort(res.begin(), res.end(),
            [](const Crossing& l, const Crossing& r) { return l.onA < r.onA; });
  return res;
}

// A poly is embedded if no two of its segments cross or overlap (shared
// consecutive endpoints excepted).
inline bool polyEmbedded(const Poly& P) {
  struct Item {
    Seg s;
    int strand, idx;
  };
  std::vector<Item> segs;
  for (int st = 0; st < static_cast<int>(P.strands.size()); ++st)
    for (int i = 0; i < static_cast<int>(P.strands[st].segCount()); ++i)
      segs.push_back({P.strands[st].seg(i), st, i});
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) {
      std::vector<Pt> pts;
      geo::crossingsOfSegs(segs[i].s, segs[j].s, pts);
      if (!pts.empty()) return false;
    }
  return true;
}

inline bool polysDisjoint(const Poly& A, const Poly& B) { return polyCrossings(A, B).empty(); }

// Rectilinear loop builder: consecutive corner points, closing back to the
// first. Alternating axis directions are required.
inline Poly rectLoop(std::vector<Pt> corners) {
  if (corners.size() < 4) throw std::invalid_argument("rectLoop: too few corners");
  Strand s;
  s.pts = std::move(corners);
  s.pts.push_back(s.pts.front());
  for (size_t i = 0; i + 1 < s.pts.size(); ++i) {
    const Pt &a = s.pts[i], &b = s.pts[i + 1];
    if ((a.x == b.x) == (a.y == b.y))
      throw std::invalid_argument("rectLoop: segments must be axis-parallel and nonempty");
  }
  Poly p;
  p.closed = true;
  p.strands.push_back(std::move(s));
  return p;
}

// Axis-aligned box as a counterclockwise loop: (x0,y0)->(x1,y0)->(x1,y1)->(x0,y1).
inline Poly boxLoop(coord_t x0, coord_t y0, coord_t x1, coord_t y1) {
  return rectLoop({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

}  // namespace mcg
