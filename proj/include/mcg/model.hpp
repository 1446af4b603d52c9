#pragma once

// Slit-plane model of Sigma_g^n.
//
// The surface is a rectangle frame (outer boundary = component n, basepoint *
// in its bottom-left corner) with vertical slit walls. Walls come in glued
// pairs ("portals", one pair per handle: left face of the odd wall is glued to
// the right face of the even wall by horizontal translation, and vice versa)
// or stand alone as boundary components (holes). Below every wall a vertical
// cut runs to the floor; the complement of walls and cuts is simply connected,
// so the based homotopy class of any loop is literally its sequence of cut
// crossings and portal transits. That sequence, translated to generators, is
// the word of the loop; the image of a loop under a Dehn twist is computed by
// splicing a full copy of the twisting curve's sequence at every crossing.
//
// pi1 basis: a_i (through portal i), b_i (around the odd wall of portal i),
// eps_j (around hole j). Crossing the cut below an even wall reads as the
// conjugate a_i b_i^{-1} a_i^{-1} (a loop around the even wall is the inverse
// of a loop around its partner, rethreaded through the portal). Arcs gamma_j
// run from * to hole j and track boundary-twist data that pi1 alone misses.

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcg/automorphism.hpp"
#include "mcg/geometry.hpp"
#include "mcg/homology.hpp"
#include "mcg/words.hpp"

namespace mcg {

// Global sign conventions. kHandedness is fixed so that the chain relation
// t_d t_e = (t_{c1} t_{c2} t_{c3})^4 verifies with positive twists (mirror
// convention would verify the inverse relation). kEvenConjDir/kEvenInner pin
// the rethreading word for even-wall cut crossings; the startup self-checks
// in tests/model reject any other combination.
constexpr int kHandedness = -1;
constexpr int kEvenConjDir = -1;
constexpr int kEvenInner = -1;

namespace lay {  // layout constants, milli-units of kUnit
constexpr coord_t M = kUnit / 1000;
constexpr coord_t mu(coord_t milli) { return milli * M; }

constexpr coord_t kWallBot = 1000, kWallTop = 1500;
constexpr coord_t kHoleBot = 1660, kHoleTop = 1740;
constexpr coord_t kHolePitch = 60;
constexpr coord_t kSkyY = 3000;  // generator highway base
constexpr coord_t kFrameTop = 4000;
}  // namespace lay

struct Wall {
  coord_t x = 0;
  coord_t ybot = 0, ytop = 0;
  enum Kind { PortalOdd, PortalEven, Hole } kind = Hole;
  int portal = -1;   // 1-based portal index for portal walls
  int holeIdx = -1;  // 1-based boundary index for holes
};

struct RawEvent {
  PolyPos pos;
  bool transit = false;
  int wall = -1;   // wall index for cut crossings
  int dir = 0;     // cut: +1 L-to-R; transit: +1 forward (enter odd wall left face)
  int portal = -1; // transit only
};

class SurfaceModel {
 public:
  SurfaceSpec spec;
  int nA = 0, nB = 0;  // interior holes near the chain / in the far-left zone
  std::vector<Wall> walls;
  coord_t frameL = 0, frameR = 0;

  // pi1 generator indices
  int genA(int i) const { return 2 * (i - 1); }
  int genB(int i) const { return 2 * (i - 1) + 1; }
  int genE(int j) const { return 2 * spec.g + (j - 1); }

  SurfaceModel(SurfaceSpec s, int zoneA) : spec(s) {
    using namespace lay;
    if (s.g < 0 || s.n < 1) throw std::invalid_argument("bad surface spec");
    nA = zoneA;
    nB = s.n - 1 - nA;
    if (nA < 0 || nB < 0) throw std::invalid_argument("bad hole split");

    for (int k = 1; k <= 2 * s.g; ++k) {
      Wall w;
      w.x = mu(1000 * k);
      w.ybot = mu(kWallBot);
      w.ytop = mu(kWallTop);
      w.kind = (k % 2) ? Wall::PortalOdd : Wall::PortalEven;
      w.portal = (k + 1) / 2;
      walls.push_back(w);
    }
    for (int t = 0; t < nA; ++t) {
      Wall w;
      w.x = zoneAHoleX(t + 1);
      // genus 1: the c3 rectangle tops out below the main walls, so the
      // zone-A hole walls sit beside W_2 rather than above W_3
      w.ybot = mu(s.g >= 2 ? kHoleBot : (s.g == 1 ? 1270 : kWallBot));
      w.ytop = mu(s.g >= 2 ? kHoleTop : (s.g == 1 ? 1350 : kWallTop));
      w.kind = Wall::Hole;
      w.holeIdx = t + 1;
      walls.push_back(w);
    }
    for (int t = 0; t < nB; ++t) {
      Wall w;
      w.x = mu(-500 - 300 * t);
      w.ybot = mu(kHoleBot);
      w.ytop = mu(kHoleTop);
      w.kind = Wall::Hole;
      w.holeIdx = nA + t + 1;
      walls.push_back(w);
    }
    frameL = mu(-500 - 300 * std::max(nB - 1, 0) - 700);
    frameR = mu(2000 * s.g + 1200);
    if (s.g == 0) frameR = mu(1000 * (nA + 1) + 200);
  }

  coord_t zoneAHoleX(int j) const {  // j = 1..nA
    using namespace lay;
    if (spec.g == 0) return mu(1000 * j);
    // inside c3's right blob (around W_3) when it exists, else inside the
    // c3 = rect[W_2] region of the genus-1 chain
    coord_t base = spec.g >= 2 ? mu(3030) : mu(2030);
    return base + mu(spec.g >= 2 ? kHolePitch : 40) * (j - 1);
  }

  const Wall* wallAt(coord_t x) const {
    for (const Wall& w : walls)
      if (w.x == x) return &w;
    return nullptr;
  }
  int wallIndexAt(coord_t x) const {
    for (size_t i = 0; i < walls.size(); ++i)
      if (walls[i].x == x) return static_cast<int>(i);
    return -1;
  }
  coord_t partnerX(const Wall& w) const {
    assert(w.kind != Wall::Hole);
    int k = static_cast<int>(w.x / lay::mu(1000));
    int pk = (w.kind == Wall::PortalOdd) ? k + 1 : k - 1;
    return lay::mu(1000 * pk);
  }

  // --- events -------------------------------------------------------------

  std::vector<RawEvent> polyEvents(const Poly& P) const {
    std::vector<RawEvent> ev;
    for (int st = 0; st < static_cast<int>(P.strands.size()); ++st) {
      const Strand& s = P.strands[st];
      for (int i = 0; i < static_cast<int>(s.segCount()); ++i) {
        Seg sg = s.seg(i);
        if (!sg.horizontal()) continue;
        for (int wi = 0; wi < static_cast<int>(walls.size()); ++wi) {
          const Wall& w = walls[wi];
          // the cut below wall w spans y in [0, w.ybot]
          if (sg.a.y < w.ybot && sg.lo(true) < w.x && w.x < sg.hi(true)) {
            RawEvent e;
            e.pos = PolyPos{st, i, geo::distAlong(sg, Pt{w.x, sg.a.y})};
            e.wall = wi;
            e.dir = sg.dx();
            ev.push_back(e);
          }
        }
      }
      // transit at the end of this strand? (multi-strand curves transit at
      // every seam; a single-strand closed curve transits iff its endpoints
      // differ, i.e. it closes up through a portal)
      bool last = (st + 1 == static_cast<int>(P.strands.size()));
      bool seamTransit =
          !last || (P.closed && !(s.pts.back() == P.strands.front().pts.front()));
      if (seamTransit) {
        const Pt& end = s.pts.back();
        int wi = wallIndexAt(end.x);
        if (wi < 0) throw std::logic_error("strand break off-wall");
        const Wall& w = walls[wi];
        assert(w.kind != Wall::Hole && w.ybot <= end.y && end.y <= w.ytop);
        Seg lastSeg = s.seg(s.segCount() - 1);
        RawEvent e;
        e.pos = PolyPos{st, static_cast<int>(s.segCount()), 0};
        e.transit = true;
        e.portal = w.portal;
        // entering the odd wall from its left face is the forward transit
        if (w.kind == Wall::PortalOdd && lastSeg.dx() == +1)
          e.dir = +1;
        else if (w.kind == Wall::PortalEven && lastSeg.dx() == -1)
          e.dir = -1;
        else
          throw std::logic_error("unsupported transit direction");
        ev.push_back(e);
      }
    }
    std::sort(ev.begin(), ev.end(),
              [](const RawEvent& a, const RawEvent& b) { return a.pos < b.pos; });
    rotateToBase(ev, P, [](const RawEvent& e) { return e.pos; });
    return ev;
  }

  // Rotate a position-sorted item list so reading starts at P.base.
  template <class T, class PosFn>
  static void rotateToBase(std::vector<T>& items, const Poly& P, PosFn pos) {
    if (!P.closed || items.empty()) return;
    if (P.base == PolyPos{}) return;
    auto it = std::find_if(items.begin(), items.end(),
                           [&](const T& t) { return !(pos(t) < P.base); });
    std::rotate(items.begin(), it, items.end());
  }

  FreeWord eventLetters(const RawEvent& e) const {
    FreeWord w;
    if (e.transit) {
      w.append(Letter(genA(e.portal), e.dir));
      return w;
    }
    const Wall& wl = walls[e.wall];
    switch (wl.kind) {
      case Wall::Hole:
        w.append(Letter(genE(wl.holeIdx), e.dir));
        break;
      case Wall::PortalOdd:
        w.append(Letter(genB(wl.portal), e.dir));
        break;
      case Wall::PortalEven: {
        // loop around the even wall = rethreaded inverse loop around the odd
        FreeWord core;
        core.append(Letter(genA(wl.portal), kEvenConjDir));
        core.append(Letter(genB(wl.portal), kEvenInner));
        core.append(Letter(genA(wl.portal), -kEvenConjDir));
        if (e.dir > 0)
          w.append(core);
        else
          w.appendInverse(core);
        break;
      }
    }
    return w;
  }

  FreeWord polyWord(const Poly& P) const {
    FreeWord w;
    for (const RawEvent& e : polyEvents(P)) w.append(eventLetters(e));
    return w;
  }

  HomologyClass polyClass(const Poly& P) const {
    return polyWord(P).abelianize(spec.rank());
  }
};

// A curve prepared for twisting: polyline plus cached cyclic event sequence.
struct CurveGeom {
  Poly poly;
  std::vector<RawEvent> events;  // sorted along the curve

  void prepare(const SurfaceModel& m) { events = m.polyEvents(poly); }
};

// Word of the target loop/arc with a full copy of c spliced in at each
// crossing. `twistSign` +1 is the right-handed twist under kHandedness.
inline FreeWord twistImageWord(const SurfaceModel& m, const CurveGeom& c, int twistSign,
                               const Poly& target, int power = 1) {
  struct Item {
    PolyPos pos;
    int kind;  // 0 event, 1 crossing
    size_t idx;
  };
  std::vector<RawEvent> tev = m.polyEvents(target);
  std::vector<Crossing> cross = polyCrossings(target, c.poly);
  std::vector<Item> items;
  for (size_t i = 0; i < tev.size(); ++i) items.push_back({tev[i].pos, 0, i});
  for (size_t i = 0; i < cross.size(); ++i) items.push_back({cross[i].onA, 1, i});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.kind < b.kind;
  });
  SurfaceModel::rotateToBase(items, target, [](const Item& i) { return i.pos; });

  // rotation of c's event cycle starting after position p (dir=+1) or before
  // it, inverted (dir=-1)
  auto rotation = [&](const PolyPos& p, int dir, FreeWord& out) {
    const auto& ev = c.events;
    size_t n = ev.size();
    if (n == 0) return;
    size_t first = 0;
    while (first < n && ev[first].pos < p) ++first;
    if (dir > 0) {
      for (size_t k = 0; k < n; ++k) out.append(m.eventLetters(ev[(first + k) % n]));
    } else {
      for (size_t k = 0; k < n; ++k) {
        const RawEvent& e = ev[(first + n - 1 - k) % n];
        out.appendInverse(m.eventLetters(e));
      }
    }
  };

  FreeWord out;
  for (const Item& it : items) {
    if (it.kind == 0) {
      out.append(m.eventLetters(tev[it.idx]));
    } else {
      const Crossing& x = cross[it.idx];
      int dir = x.sign * twistSign * kHandedness;
      for (int r = 0; r < power; ++r) rotation(x.onB, dir, out);
    }
  }
  return out;
}

}  // namespace mcg
