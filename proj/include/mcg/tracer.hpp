#pragma once

// Boundary of a regular neighborhood of a union of curves.
//
// Input: closed polyline loops plus optional connector arcs whose endpoints
// lie on loop segments (T-joints). Output: the boundary components of a thin
// regular neighborhood of the union, as polylines offset by eta from the
// input. The walk follows offset strands; at a transversal crossing or a
// T-joint the boundary continues into the angular sector it occupies, and
// portal transits pass through with the offset preserved (the gluing is a
// translation). This produces the chain-neighborhood curves d, e, d', e',
// a, b and all band sums (daisy curves x_i); callers pick the wanted
// component by homology class or position.

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <vector>

#include "mcg/geometry.hpp"

namespace mcg {

namespace trace_detail {
struct Vec {
  int x = 0, y = 0;
  bool operator==(const Vec&) const = default;
};
inline Vec rotCCW(Vec v) { return Vec{-v.y, v.x}; }
inline Vec rotCW(Vec v) { return Vec{v.y, -v.x}; }
inline Vec neg(Vec v) { return Vec{-v.x, -v.y}; }
}  // namespace trace_detail

class NbhdTracer {
 public:
  NbhdTracer(std::vector<const Poly*> loops, std::vector<const Poly*> arcs, coord_t eta)
      : eta_(eta) {
    for (const Poly* p : loops) members_.push_back({p, false});
    for (const Poly* p : arcs) {
      if (p->strands.size() != 1) throw std::invalid_argument("tracer: arc must be one strand");
      members_.push_back({p, true});
    }
    build();
  }

  std::vector<Poly> components() {
    std::vector<Poly> out;
    std::set<std::pair<int, int>> visited;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      for (int side : {+1, -1})
        if (!visited.count({e, side})) out.push_back(walk(e, side, visited));
    return out;
  }

 private:
  using Vec = trace_detail::Vec;

  struct Member {
    const Poly* poly;
    bool isArc;
  };
  struct Stop {
    PolyPos pos;
    int node;
  };
  struct Leg {
    int edge;
    bool atStart;
    Vec dir;  // outward direction at the node
  };
  struct Node {
    Pt point;
    std::vector<Leg> legs;
  };
  struct WayPt {
    PolyPos pos;
    Pt pt;
    bool transitBefore;
    Pt wallExit;  // where the previous strand ended (on a wall)
  };
  struct Edge {
    int member;
    PolyPos from, to;
    bool wraps;
    int nodeFrom, nodeTo;
  };
  // One step of a raw member path in walk order. transitBefore means: the
  // path previously reached `wallExit` (a point on a wall, which equals the
  // preceding step's pt when that step already sits on the wall), broke
  // through the portal and resumes at `pt`.
  struct RawStep {
    Pt pt;
    bool transitBefore = false;
    Pt wallExit{};
  };

  coord_t eta_;
  std::vector<Member> members_;
  std::vector<std::vector<WayPt>> ways_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;

  static Vec segDir(const Seg& s) { return Vec{s.dx(), s.dy()}; }
  Seg segAt(int mi, const PolyPos& p) const {
    return members_[mi].poly->strands[p.strand].seg(p.seg);
  }
  Pt pointAt(int mi, const PolyPos& p) const {
    Seg s = segAt(mi, p);
    Vec d = segDir(s);
    return Pt{s.a.x + d.x * p.dist, s.a.y + d.y * p.dist};
  }

  void build() {
    ways_.resize(members_.size());
    for (size_t mi = 0; mi < members_.size(); ++mi) {
      const Poly& P = *members_[mi].poly;
      bool seamTransit = P.closed && !(P.strands.back().pts.back() == P.strands.front().pts.front());
      for (int st = 0; st < static_cast<int>(P.strands.size()); ++st) {
        const Strand& s = P.strands[st];
        for (int i = 0; i < static_cast<int>(s.segCount()); ++i) {
          WayPt w;
          w.pos = PolyPos{st, i, 0};
          w.pt = s.pts[i];
          w.transitBefore = (i == 0 && (st > 0 || seamTransit));
          if (w.transitBefore) {
            const Strand& prev =
                P.strands[(st + P.strands.size() - 1) % P.strands.size()];
            w.wallExit = prev.pts.back();
          }
          ways_[mi].push_back(w);
        }
      }
    }

    std::vector<std::vector<Stop>> stops(members_.size());
    for (size_t i = 0; i < members_.size(); ++i)
      for (size_t j = i + 1; j < members_.size(); ++j)
        for (const Crossing& c : polyCrossings(*members_[i].poly, *members_[j].poly)) {
          int node = static_cast<int>(nodes_.size());
          nodes_.push_back(Node{pointAt(static_cast<int>(i), c.onA), {}});
          stops[i].push_back({c.onA, node});
          stops[j].push_back({c.onB, node});
        }

    for (size_t i = 0; i < members_.size(); ++i) {
      if (!members_[i].isArc) continue;
      const Strand& s = members_[i].poly->strands.front();
      for (bool atStart : {true, false}) {
        Pt p = atStart ? s.pts.front() : s.pts.back();
        bool hosted = false;
        for (size_t h = 0; h < members_.size() && !hosted; ++h) {
          if (h == i) continue;
          const Poly& host = *members_[h].poly;
          for (int st = 0; st < static_cast<int>(host.strands.size()) && !hosted; ++st)
            for (int sg = 0; sg < static_cast<int>(host.strands[st].segCount()); ++sg) {
              Seg hs = host.strands[st].seg(sg);
              bool onSeg =
                  hs.horizontal()
                      ? (hs.a.y == p.y && geo::strictlyBetween(hs.lo(true), p.x, hs.hi(true)))
                      : (hs.a.x == p.x && geo::strictlyBetween(hs.lo(false), p.y, hs.hi(false)));
              if (!onSeg) continue;
              int node = static_cast<int>(nodes_.size());
              nodes_.push_back(Node{p, {}});
              stops[h].push_back({PolyPos{st, sg, geo::distAlong(hs, p)}, node});
              PolyPos arcPos =
                  atStart ? PolyPos{0, 0, 0}
                          : PolyPos{0, static_cast<int>(s.segCount()) - 1,
                                    geo::distAlong(s.seg(s.segCount() - 1), s.pts.back())};
              stops[i].push_back({arcPos, node});
              hosted = true;
              break;
            }
        }
        if (!hosted) throw std::logic_error("tracer: arc endpoint not on a host");
      }
    }

    for (size_t mi = 0; mi < members_.size(); ++mi) {
      auto& st = stops[mi];
      std::sort(st.begin(), st.end(),
                [](const Stop& a, const Stop& b) { return a.pos < b.pos; });
      if (members_[mi].isArc) {
        if (st.size() < 2) throw std::logic_error("tracer: dangling arc");
        for (size_t k = 0; k + 1 < st.size(); ++k)
          addEdge(static_cast<int>(mi), st[k], st[k + 1], false);
      } else {
        if (st.empty()) throw std::logic_error("tracer: loop disjoint from the union");
        for (size_t k = 0; k < st.size(); ++k)
          addEdge(static_cast<int>(mi), st[k], st[(k + 1) % st.size()], k + 1 == st.size());
      }
    }
  }

  void addEdge(int mi, const Stop& a, const Stop& b, bool wraps) {
    int id = static_cast<int>(edges_.size());
    Seg sa = segAt(mi, a.pos);
    Seg sb = segAt(mi, b.pos);
    nodes_[a.node].legs.push_back(Leg{id, true, segDir(sa)});
    nodes_[b.node].legs.push_back(Leg{id, false, trace_detail::neg(segDir(sb))});
    edges_.push_back(Edge{mi, a.pos, b.pos, wraps, a.node, b.node});
  }

  std::vector<WayPt> cornersBetween(const Edge& e) const {
    const auto& ws = ways_[e.member];  // already in traversal order
    std::vector<WayPt> out;
    if (!e.wraps) {
      for (const WayPt& w : ws)
        if (e.from < w.pos && w.pos < e.to) out.push_back(w);
    } else {
      for (const WayPt& w : ws)
        if (e.from < w.pos) out.push_back(w);
      for (const WayPt& w : ws)
        if (w.pos < e.to) out.push_back(w);
    }
    return out;
  }

  std::vector<RawStep> rawPath(const Edge& e, bool forward) const {
    std::vector<RawStep> fwd;
    fwd.push_back({pointAt(e.member, e.from)});
    for (const WayPt& w : cornersBetween(e)) fwd.push_back({w.pt, w.transitBefore, w.wallExit});
    fwd.push_back({pointAt(e.member, e.to)});
    if (forward) return fwd;
    std::vector<RawStep> rev;
    for (size_t k = fwd.size(); k-- > 0;) {
      rev.push_back({fwd[k].pt});
      if (fwd[k].transitBefore) {
        // reversed walk: fwd[k].pt is itself the wall point we arrive at;
        // resume at the forward walk's wall exit
        rev.push_back({fwd[k].wallExit, true, fwd[k].pt});
      }
    }
    return rev;
  }

  struct EmitResult {
    std::vector<RawStep> pts;  // shifted corners with transit breaks
    Vec arrivalDir{};
  };

  EmitResult emitEdge(const Edge& e, bool forward, int sigma) const {
    std::vector<RawStep> path = rawPath(e, forward);
    struct SSeg {
      Pt a, b;
      bool breakBefore;
      Pt exitShifted;
    };
    std::vector<SSeg> segs;
    bool pendingBreak = false;
    Pt pendingExit{};
    EmitResult res;
    Pt cur = path[0].pt;
    for (size_t i = 1; i < path.size(); ++i) {
      if (path[i].transitBefore) {
        if (!(cur == path[i].wallExit)) {
          Seg s{cur, path[i].wallExit};
          Vec d = segDir(s);
          Vec n = sigma > 0 ? trace_detail::rotCCW(d) : trace_detail::rotCW(d);
          segs.push_back({Pt{s.a.x + n.x * eta_, s.a.y + n.y * eta_},
                          Pt{s.b.x + n.x * eta_, s.b.y + n.y * eta_}, pendingBreak,
                          pendingExit});
          pendingBreak = false;
          res.arrivalDir = d;
        }
        if (segs.empty()) throw std::logic_error("tracer: transit before any segment");
        pendingBreak = true;
        pendingExit = segs.back().b;
        cur = path[i].pt;
        continue;
      }
      if (cur == path[i].pt) continue;
      Seg s{cur, path[i].pt};
      Vec d = segDir(s);
      Vec n = sigma > 0 ? trace_detail::rotCCW(d) : trace_detail::rotCW(d);
      segs.push_back({Pt{s.a.x + n.x * eta_, s.a.y + n.y * eta_},
                      Pt{s.b.x + n.x * eta_, s.b.y + n.y * eta_}, pendingBreak, pendingExit});
      pendingBreak = false;
      res.arrivalDir = d;
      cur = path[i].pt;
    }
    if (segs.empty()) throw std::logic_error("tracer: empty edge");
    for (size_t i = 0; i < segs.size(); ++i) {
      if (i == 0) {
        res.pts.push_back({segs[i].a});
      } else if (segs[i].breakBefore) {
        res.pts.push_back({segs[i].exitShifted});
        res.pts.push_back({segs[i].a, true, segs[i].exitShifted});
      } else {
        Seg a{segs[i - 1].a, segs[i - 1].b};
        Seg b{segs[i].a, segs[i].b};
        if (a.horizontal() != b.horizontal()) {
          Pt corner = a.horizontal() ? Pt{b.a.x, a.a.y} : Pt{a.a.x, b.a.y};
          res.pts.push_back({corner});
        }
      }
      if (i + 1 == segs.size()) res.pts.push_back({segs[i].b});
    }
    return res;
  }

  Poly walk(int startEdge, int startAbsSide, std::set<std::pair<int, int>>& visited) {
    Poly out;
    out.closed = true;
    Strand cur;
    int edge = startEdge;
    bool forward = true;
    int sigma = startAbsSide;
    bool firstEdge = true;
    Vec prevArrival{};

    while (true) {
      int absSide = forward ? sigma : -sigma;
      if (visited.count({edge, absSide})) break;
      visited.insert({edge, absSide});

      EmitResult er = emitEdge(edges_[edge], forward, sigma);

      if (!firstEdge && !er.pts.empty() && !cur.pts.empty()) {
        Pt L = cur.pts.back();
        Pt F = er.pts.front().pt;
        if (!(L == F) && L.x != F.x && L.y != F.y) {
          Pt corner = prevArrival.y == 0 ? Pt{F.x, L.y} : Pt{L.x, F.y};
          cur.pts.push_back(corner);
        }
      }
      for (auto& st : er.pts) {
        if (st.transitBefore) {
          out.strands.push_back(cur);
          cur = Strand{};
        }
        if (cur.pts.empty() || !(cur.pts.back() == st.pt)) cur.pts.push_back(st.pt);
      }

      const Edge& E = edges_[edge];
      int nodeId = forward ? E.nodeTo : E.nodeFrom;
      const Node& node = nodes_[nodeId];
      Vec a = er.arrivalDir;
      Vec Lin = trace_detail::neg(a);
      Vec q = sigma > 0 ? trace_detail::rotCW(Lin) : trace_detail::rotCCW(Lin);
      const Leg* legQ = findLeg(node, q);
      Vec nPrime;
      if (!legQ) {
        legQ = findLeg(node, trace_detail::neg(Lin));
        if (!legQ) throw std::logic_error("tracer: no departure leg");
        nPrime = sigma > 0 ? trace_detail::rotCCW(a) : trace_detail::rotCW(a);
      } else {
        nPrime = Lin;
      }
      prevArrival = a;
      edge = legQ->edge;
      forward = legQ->atStart;
      sigma = (nPrime == trace_detail::rotCCW(legQ->dir)) ? +1 : -1;
      firstEdge = false;
    }

    out.strands.push_back(cur);
    if (!out.strands.empty() && out.strands.front().pts.empty())
      out.strands.erase(out.strands.begin());

    if (out.strands.size() == 1) {
      Strand& s = out.strands[0];
      if (s.pts.size() < 2) throw std::logic_error("tracer: degenerate walk");
      if (!(s.pts.front() == s.pts.back())) {
        Pt L = s.pts.back(), F = s.pts.front();
        if (L.x != F.x && L.y != F.y) {
          Pt corner = prevArrival.y == 0 ? Pt{F.x, L.y} : Pt{L.x, F.y};
          s.pts.push_back(corner);
        }
        s.pts.push_back(s.pts.front());
      }
    } else {
      // the walk started mid-strand: stitch last and first partial strands
      Strand& firstS = out.strands.front();
      Strand& lastS = out.strands.back();
      Pt L = lastS.pts.back(), F = firstS.pts.front();
      if (!(L == F) && L.x != F.x && L.y != F.y) {
        Pt corner = prevArrival.y == 0 ? Pt{F.x, L.y} : Pt{L.x, F.y};
        lastS.pts.push_back(corner);
      }
      lastS.pts.insert(lastS.pts.end(), firstS.pts.begin(), firstS.pts.end());
      out.strands.front() = std::move(lastS);
      out.strands.pop_back();
    }
    normalize(out);
    return out;
  }

  const Leg* findLeg(const Node& node, Vec dir) const {
    for (const Leg& l : node.legs)
      if (l.dir == dir) return &l;
    return nullptr;
  }

  static void normalize(Poly& p) {
    for (Strand& s : p.strands) {
      std::vector<Pt> out;
      for (const Pt& pt : s.pts) {
        if (!out.empty() && out.back() == pt) continue;
        if (out.size() >= 2) {
          Pt& a = out[out.size() - 2];
          Pt& b = out.back();
          if ((a.x == b.x && b.x == pt.x) || (a.y == b.y && b.y == pt.y)) {
            b = pt;
            continue;
          }
        }
        out.push_back(pt);
      }
      s.pts = std::move(out);
    }
    if (p.strands.size() == 1 && p.closed) {
      auto& pts = p.strands[0].pts;
      while (pts.size() > 3 && pts.front() == pts.back()) {
        const Pt& a = pts[pts.size() - 2];
        const Pt& b = pts[0];
        const Pt& c = pts[1];
        if ((a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y)) {
          pts.erase(pts.begin());
          pts.back() = pts.front();
        } else {
          break;
        }
      }
    }
  }
};

}  // namespace mcg
