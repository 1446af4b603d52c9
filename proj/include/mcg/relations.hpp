#pragma once

// Catalog of the named mapping-class relations, parametrized instantiation,
// and product-preserving rewriting (Hurwitz moves, relator substitution,
// conjugation pushes).
//
// Words are written left-to-right with the rightmost letter acting first.
// Blocks reused across relations:
//   H_i   = t_{c1} .. t_{ci}          Hbar_i = t_{ci} .. t_{c1}
//   T_10m = {(H_3)^2 t_{c2} t_{c1} t_{c3} t_{c2}}^m
//   phi_12 = t_{c4} t_{c3} t_{c2} t_{c1} t_{c1} t_{c2} t_{c3} t_{c4} t_{c4} t_d t_{c3} t_{c4}
//   phi_12,m = u phi_12 u^-1,  u = t_{c3}^{-m} t_e^{m}  (12 positive letters
//   along the u-images when used inside positive factorizations)
//   D_9, M_9, K_4, I_{2g-8}, J_{2g-6}, L_16 as defined alongside.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/twist.hpp"

namespace mcg {

using Params = std::map<std::string, int>;

struct Relation {
  std::string name;
  Params params;
  TwistWord lhs, rhs;
};

namespace words {

inline TwistWord chain(Engine& e, int from, int to) {
  TwistWord w;
  w.surface = e.registry().model.spec;
  if (from <= to)
    for (int k = from; k <= to; ++k) w *= e.letter("c" + std::to_string(k));
  else
    for (int k = from; k >= to; --k) w *= e.letter("c" + std::to_string(k));
  return w;
}
inline TwistWord H(Engine& e, int i) { return chain(e, 1, i); }
inline TwistWord Hbar(Engine& e, int i) { return chain(e, i, 1); }

inline TwistWord empty(Engine& e) {
  TwistWord w;
  w.surface = e.registry().model.spec;
  return w;
}

// conjugate of a single letter as a derived-curve letter
inline TwistLetterRef conjLetter(Engine& e, TwistLetterRef l, const TwistWord& by) {
  if (by.letters.empty()) return l;
  std::vector<std::pair<int, int>> conj;
  for (const auto& b : by.letters) conj.emplace_back(b.curve, b.sign);
  int idx = e.registry().derivedFor(l.curve, conj);
  return {idx, l.sign};
}

// letterwise conjugate: by * w * by^-1 with every letter kept a twist letter
inline TwistWord conjWord(Engine& e, const TwistWord& w, const TwistWord& by) {
  TwistWord r;
  r.surface = w.surface;
  for (const auto& l : w.letters) r.letters.push_back(conjLetter(e, l, by));
  return r;
}

inline TwistWord image(Engine& e, const std::string& curve, const TwistWord& by, int sign = +1) {
  TwistWord r;
  r.surface = by.surface;
  r.letters.push_back(conjLetter(e, {e.registry().require(curve), sign}, by));
  return r;
}

inline TwistWord T10(Engine& e, int m) {
  TwistWord block = H(e, 3) * H(e, 3) *
                    e.word({{"c2", 1}, {"c1", 1}, {"c3", 1}, {"c2", 1}});
  return block.pow(m);
}

inline TwistWord phi12(Engine& e) {
  return e.word({{"c4", 1}, {"c3", 1}, {"c2", 1}, {"c1", 1}, {"c1", 1}, {"c2", 1},
                 {"c3", 1}, {"c4", 1}, {"c4", 1}, {"d", 1}, {"c3", 1}, {"c4", 1}});
}

// 12 positive letters: phi_12 conjugated by u = t_{c3}^{-m} t_e^{m}
inline TwistWord phi12m(Engine& e, int m) {
  TwistWord u = e.letter("c3", -1).pow(m) * e.letter("e").pow(m);
  return conjWord(e, phi12(e), u);
}

inline TwistWord D9(Engine& e) {
  TwistWord cdc = e.word({{"c4", 1}, {"d", 1}, {"c3", 1}});
  TwistWord c3i = e.letter("c3", -1);
  TwistWord r = image(e, "c5", cdc.inverse());
  r *= e.letter("c1");
  r *= image(e, "c2", c3i);
  r *= image(e, "c3", cdc.inverse());
  r *= e.letter("e");
  r *= image(e, "c4", c3i);
  r *= e.word({{"c2", 1}, {"c1", 1}, {"c5", 1}});
  return r;
}

inline TwistWord M9(Engine& e) {
  TwistWord u1 = e.word({{"c4", 1}, {"d", 1}, {"c3", 1}, {"c4", 1}}).inverse();
  TwistWord u2 = e.word({{"c5", 1}, {"c4", 1}}).inverse();
  TwistWord c4i = e.letter("c4", -1);
  TwistWord r = image(e, "c5", u1);
  r *= e.letter("c2");
  r *= image(e, "c6", u2);
  r *= e.letter("d");
  r *= image(e, "c3", c4i);
  r *= e.letter("c7");
  r *= image(e, "c6", u2);
  r *= e.letter("d");
  r *= image(e, "e", c4i);
  return r;
}

inline TwistWord dLetter(Engine& e, int j) {
  // d_j = t_{c_{j-3}}^{-1} t_{c_{j-2}}^{-1} t_{c_{j-1}}^{-1}(c_j)
  TwistWord u = e.letter("c" + std::to_string(j - 3), -1) *
                e.letter("c" + std::to_string(j - 2), -1) *
                e.letter("c" + std::to_string(j - 1), -1);
  return image(e, "c" + std::to_string(j), u);
}
inline TwistWord eLetter(Engine& e, int j) {
  TwistWord u = e.letter("c" + std::to_string(j - 3)) * e.letter("c" + std::to_string(j - 2)) *
                e.letter("c" + std::to_string(j - 1));
  return image(e, "c" + std::to_string(j), u);
}
inline TwistWord fLetter(Engine& e, int h) {
  TwistWord u = empty(e);
  for (int k = h - 5; k <= h - 1; ++k) u *= e.letter("c" + std::to_string(k));
  return image(e, "c" + std::to_string(h), u);
}

inline TwistWord K4(Engine& e) {
  TwistWord r = empty(e);
  for (int h : {9, 8, 7, 6}) r *= fLetter(e, h);
  return r;
}

inline TwistWord Iblock(Engine& e, int g) {  // I_{2g-8} = t_{d_10} ... t_{d_{2g+1}}
  TwistWord r = empty(e);
  for (int j = 10; j <= 2 * g + 1; ++j) r *= dLetter(e, j);
  return r;
}
inline TwistWord Jblock(Engine& e, int g) {  // J_{2g-6} = t_{e_{2g+1}} ... t_{e_8}
  TwistWord r = empty(e);
  for (int j = 2 * g + 1; j >= 8; --j) r *= eLetter(e, j);
  return r;
}
inline TwistWord L16(Engine& e) {  // prod_{i=1}^{4} t_{c_{i+3}} t_{c_{i+2}} t_{c_{i+1}} t_{c_i}
  TwistWord r = empty(e);
  for (int i = 1; i <= 4; ++i) r *= chain(e, i + 3, i);
  return r;
}

// O_{10m-12n+22}: positive word with T_10m = O * t_{c1}^2 t_d^{n-2} t_e^{n-2},
// assembled from t_{c3}^{-2m} (H_3)^{4(m-n+2)} t_{c1}^{-2} by absorbing the
// inverse twists into conjugate letters. Requires m >= 2(n-2)+1.
inline TwistWord Oblock(Engine& e, int m, int n) {
  int r = n - 2;
  if (m < 2 * r + 1) throw std::invalid_argument("Oblock: m too small");
  TwistWord out = empty(e);
  // t_{c3}^{-s}(H_3)^s = prod_{i=s..1} t_{c1} t_{t_{c3}^{-i}(c2)}
  for (int i = 2 * m; i >= 1; --i) {
    out *= e.letter("c1");
    out *= image(e, "c2", e.letter("c3", -1).pow(i));
  }
  int j = 2 * m - 4 * r;  // remaining (H_3)^j t_{c1}^{-2}, j >= 2
  out *= H(e, 3).pow(j - 2);
  out *= image(e, "c2", e.letter("c1"));
  out *= e.letter("c3");
  out *= image(e, "c2", e.letter("c1").pow(2));
  out *= e.letter("c3");
  return out;
}

}  // namespace words

class RelationCatalog {
 public:
  static std::vector<std::string> names() {
    return {"braid1", "braid2", "chain", "daisy", "bkm",  "dkp",  "eq_a", "eq_b",
            "eq_c",   "lem1",   "lem2",  "prop1", "long1", "eq_H", "eq_g2", "eq_r3",
            "eq_r4"};
  }

  // The surface each instantiation expects, as (g, n, zoneA split).
  static SurfaceSpec surfaceFor(const std::string& name, const Params& p) {
    auto geti = [&](const char* k, int dflt) {
      auto it = p.find(k);
      return it == p.end() ? dflt : it->second;
    };
    int g = geti("g", 2), n = geti("n", 2);
    if (name == "daisy") return SurfaceSpec{0, geti("p", 2) + 2};
    if (name == "bkm" || name == "dkp" || name == "eq_H") return SurfaceSpec{2, 2};
    if (name == "eq_g2") return SurfaceSpec{2, n};
    if (name == "eq_r3" || name == "eq_r4") return SurfaceSpec{g, n};
    if (name == "chain" && geti("oneBoundary", 0)) return SurfaceSpec{geti("h", 1), 1};
    return SurfaceSpec{g, n};
  }

  static Relation instantiate(Engine& e, const std::string& name, Params p) {
    using namespace words;
    Relation r;
    r.name = name;
    r.params = p;
    auto geti = [&](const char* k, int dflt) {
      auto it = p.find(k);
      return it == p.end() ? dflt : it->second;
    };
    const SurfaceSpec spec = e.registry().model.spec;
    const int g = spec.g;

    if (name == "braid1" || name == "braid2") {
      // hurwitz1: t_{c_{i-1}} . t_{c_m} .. t_{c_l} = t_{c_m} .. t_{c_l} . t_{c_i}
      // hurwitz2: t_{c_l} .. t_{c_m} . t_{c_{i-1}} = t_{c_i} . t_{c_l} .. t_{c_m}
      int l = geti("l", 1), mm = geti("m", 2 * g + 1), i = geti("i", l + 1);
      if (!(l + 1 <= i && i <= mm - 1)) throw std::invalid_argument("braid: bad (l,i,m)");
      std::string ci = "c" + std::to_string(i), cim1 = "c" + std::to_string(i - 1);
      if (name == "braid1") {
        r.lhs = e.letter(cim1) * chain(e, mm, l);
        r.rhs = chain(e, mm, l) * e.letter(ci);
      } else {
        r.lhs = chain(e, l, mm) * e.letter(cim1);
        r.rhs = e.letter(ci) * chain(e, l, mm);
      }
      return r;
    }
    if (name == "chain") {
      int h = geti("h", 1);
      if (geti("oneBoundary", 0)) {
        // t_delta = (t_a t_b)^{4h+2} on Sigma_h^1; for h = 1 this is the
        // elliptic-pencil relation t_delta = (t_a t_b)^6
        if (h != 1) throw std::invalid_argument("oneBoundary chain: h = 1 only");
        r.lhs = e.letter("delta1");
        r.rhs = (e.letter("a") * e.letter("b")).pow(6);
        return r;
      }
      if (h > g) throw std::invalid_argument("chain: h > g");
      std::string b1, b2;
      if (h == 1)
        b1 = "d", b2 = "e";
      else if (h == 2)
        b1 = "a", b2 = "b";
      else if (h == g && spec.n == 2)
        b1 = "delta1", b2 = "delta2";
      else
        throw std::invalid_argument("chain: h must be 1, 2, or g (with n = 2)");
      r.lhs = e.letter(b1) * e.letter(b2);
      r.rhs = chain(e, 1, 2 * h + 1).pow(2 * h + 2);
      return r;
    }
    if (name == "daisy") {
      int pp = geti("p", 2);
      if (spec.g != 0 || spec.n != pp + 2) throw std::invalid_argument("daisy: wrong surface");
      if (pp < 1) throw std::invalid_argument("daisy: p >= 1");
      r.lhs = e.letter("delta1").pow(pp - 1);
      for (int j = 2; j <= pp + 2; ++j) r.lhs *= e.letter("delta" + std::to_string(j));
      r.rhs = empty(e);
      for (int i = 1; i <= pp + 1; ++i) r.rhs *= e.letter("x" + std::to_string(i));
      return r;
    }
    if (name == "bkm") {
      // C_m = [t_{c3}^m t_e^{-m}, phi_12] = phi_{12,m}^{-1} phi_12 = T_{10m}
      int m = geti("m", 1);
      if (m < 0) throw std::invalid_argument("bkm: m >= 0");
      TwistWord u = e.letter("c3", -1).pow(m) * e.letter("e").pow(m);
      TwistWord phi = phi12(e);
      r.lhs = (u * phi * u.inverse()).inverse() * phi;  // C_m
      r.rhs = T10(e, m);
      return r;
    }
    if (name == "dkp") {
      int m = geti("m", 1);
      if (m < 1) throw std::invalid_argument("dkp: m >= 1");
      r.lhs = e.word({{"delta1", 1}, {"delta2", 1}, {"c4", 1}});
      r.rhs = D9(e) * phi12m(e, m) * T10(e, m);
      return r;
    }
    if (name == "eq_a" || name == "eq_b") {
      int k = geti("k", 1);
      if (k < 1 || k > 2 * g - 2) throw std::invalid_argument("eq_a/b: k out of range");
      if (name == "eq_a") {
        r.lhs = empty(e);
        for (int i = k; i <= 2 * g - 2; ++i) r.lhs *= chain(e, i + 3, i);
        r.rhs = chainBlock(e, k + 2, k).pow(2 * g - 1 - k);
        for (int j = k + 3; j <= 2 * g + 1; ++j) r.rhs *= dLetter(e, j);
      } else {
        r.lhs = empty(e);
        for (int i = 2 * g - 2; i >= k; --i) r.lhs *= chain(e, i, i + 3);
        r.rhs = empty(e);
        for (int j = 2 * g + 1; j >= k + 3; --j) r.rhs *= eLetter(e, j);
        r.rhs *= chainBlock(e, k, k + 2).pow(2 * g - 1 - k);
      }
      return r;
    }
    if (name == "eq_c") {
      if (g < 4) throw std::invalid_argument("eq_c: g >= 4");
      r.lhs = empty(e);
      for (int i = 4; i >= 1; --i) r.lhs *= chain(e, i, i + 5);
      r.rhs = K4(e) * chain(e, 1, 5).pow(4);
      return r;
    }
    if (name == "lem1") {
      if (g < 4) throw std::invalid_argument("lem1: g >= 4");
      r.lhs = chain(e, 1, 2 * g + 1).pow(4);
      r.rhs = H(e, 3).pow(4) * Hbar(e, 3).pow(2 * g - 8) * K4(e) * chain(e, 1, 5).pow(4) *
              Iblock(e, g);
      return r;
    }
    if (name == "lem2") {
      if (g < 4) throw std::invalid_argument("lem2: g >= 4");
      r.lhs = chain(e, 1, 2 * g + 1).pow(2 * g - 2);
      r.rhs = Jblock(e, g) * L16(e) * H(e, 3).pow(2 * g - 6) * e.word({{"dp", 1}, {"ep", 1}});
      return r;
    }
    if (name == "prop1") {
      if (g < 4) throw std::invalid_argument("prop1: g >= 4");
      r.lhs = e.word({{"delta1", 1}, {"delta2", 1}});
      TwistWord h2 = (g % 2 == 0) ? H(e, 3).pow(2) : Hbar(e, 3).pow(2);
      r.rhs = K4(e) * chain(e, 1, 5).pow(4) * Iblock(e, g) * Jblock(e, g) * L16(e) * h2 *
              e.letter("d").pow(g - 3) * e.letter("dp") * e.letter("e").pow(g - 3) *
              e.letter("ep");
      return r;
    }
    if (name == "long1") {
      if (g < 4) throw std::invalid_argument("long1: g >= 4");
      int m = geti("m", 1);
      r.lhs = L16(e) * chain(e, 1, 5).pow(4);
      r.rhs = phi12m(e, m) * T10(e, m) * M9(e) *
              e.word({{"c5", 1}, {"c3", 1}, {"c4", 1}, {"c2", 1}, {"c3", 1}});
      return r;
    }
    if (name == "eq_H") {
      int m = geti("m", 3), n = geti("n", 2);
      r.lhs = T10(e, m);
      r.rhs = Oblock(e, m, n) * e.letter("c1").pow(2) * e.letter("d").pow(n - 2) *
              e.letter("e").pow(n - 2);
      return r;
    }
    if (name == "eq_g2") {
      int m = geti("m", 3), n = geti("n", 2);
      if (spec.g != 2 || spec.n != n) throw std::invalid_argument("eq_g2: wrong surface");
      r.lhs = empty(e);
      for (int j = 1; j <= n; ++j) r.lhs *= e.letter("delta" + std::to_string(j));
      r.lhs *= e.letter("c4");
      r.rhs = g2RightSide(e, m, n);
      return r;
    }
    if (name == "eq_r3" || name == "eq_r4") {
      int m = geti("m", 3), n = geti("n", 2);
      if (spec.g < 3) throw std::invalid_argument("eq_r3/4: g >= 3");
      TwistWord Pp = conjWord(e, Pblock(e), e.letter("d").pow(n - 2));
      TwistWord core = D9(e) * phi12m(e, m) * Oblock(e, m, n) * e.letter("c1").pow(2) *
                       e.letter("e").pow(n - 2) * Pp;
      if (name == "eq_r3") {
        // t_delta t_delta' = core * t_d^{n-2}   (relation3, on Sigma_g^2 with
        // delta' the basepoint rim; here delta = delta1 when n = 2)
        if (spec.n != 2) throw std::invalid_argument("eq_r3 lives on Sigma_g^2");
        r.lhs = e.word({{"delta1", 1}, {"delta2", 1}});
        r.rhs = core * e.letter("d").pow(n - 2);
        return r;
      }
      // relation4: t_{delta_1} ... t_{delta_n} t_{d'} = core * t_{x1} .. t_{x_{n-1}}
      r.lhs = empty(e);
      for (int j = 1; j <= n; ++j) r.lhs *= e.letter("delta" + std::to_string(j));
      r.lhs *= e.letter("dp");
      r.rhs = core;
      for (int j = 1; j <= n - 1; ++j) r.rhs *= e.letter("x" + std::to_string(j));
      return r;
    }
    throw std::invalid_argument("unknown relation: " + name);
  }

  // (g2): t_{d1}..t_{dn} t_{c4} =
  //       D_8 phi'_{12,m} O'_{10m-12n+22} t_{c1}^2 t_e^{n-2} t_{x1}..t_{x_{n-1}}
  static TwistWord g2RightSide(Engine& e, int m, int n) {
    using namespace words;
    TwistWord d9 = D9(e);
    TwistWord d8;
    d8.surface = d9.surface;
    d8.letters.assign(d9.letters.begin(), d9.letters.end() - 1);
    TwistWord c5 = e.letter("c5");
    TwistWord rhs = d8 * conjWord(e, phi12m(e, m), c5) * conjWord(e, Oblock(e, m, n), c5) *
                    e.letter("c1").pow(2) * e.letter("e").pow(n - 2);
    for (int j = 1; j <= n - 1; ++j) rhs *= e.letter("x" + std::to_string(j));
    return rhs;
  }

  // P_{4g^2+6g-29}: positive word with (c1..c_{2g+1})^{2g+2} = (c1..c5)^6 t_{c4} P,
  // built from the coil expansion (t_{c1}..t_{cN})^{N+1} = (t_{c1}..t_{cN-1})^N coil_N
  static TwistWord Pblock(Engine& e) {
    using namespace words;
    const int g = e.registry().model.spec.g;
    TwistWord out = empty(e);
    for (int N = 6; N <= 2 * g + 1; ++N) {
      // coil_N = t_{cN} .. t_{c1} t_{c1} .. t_{cN}; the leading t_{c4}^{-1}
      // of the very first coil is absorbed into a conjugate letter
      if (N == 6) {
        out *= e.letter("c6");
        out *= image(e, "c5", e.letter("c4", -1));
        out *= chain(e, 3, 1);
        out *= chain(e, 1, 6);
      } else {
        out *= chain(e, N, 1);
        out *= chain(e, 1, N);
      }
    }
    return out;
  }

  static TwistWord chainBlock(Engine& e, int from, int to) { return words::chain(e, from, to); }
};

// --- rewriting -------------------------------------------------------------

struct PositiveFactorization {
  TwistWord word;
  bool nonseparatingOnly = true;
};

enum class RewriteKind { HurwitzLeft, HurwitzRight, Substitute, ConjugatePush };
enum class RewriteDir { LtoR, RtoL };

struct RewriteStep {
  RewriteKind kind;
  size_t position = 0;
  Relation relation;  // Substitute only
  RewriteDir dir = RewriteDir::LtoR;
};

// (.., t_a, t_b, ..) -> (.., t_b, t_{t_b^-1(a)}, ..); the realized product is
// unchanged and positivity is preserved.
inline PositiveFactorization hurwitzMove(Engine& eng, const PositiveFactorization& f, size_t i,
                                         RewriteDir dir = RewriteDir::LtoR) {
  if (i + 1 >= f.word.letters.size()) throw std::out_of_range("hurwitz_move: index");
  PositiveFactorization g = f;
  TwistLetterRef a = f.word.letters[i], b = f.word.letters[i + 1];
  if (dir == RewriteDir::LtoR) {
    TwistWord byInv;
    byInv.surface = f.word.surface;
    byInv.letters.push_back({b.curve, -b.sign});
    g.word.letters[i] = b;
    g.word.letters[i + 1] = words::conjLetter(eng, a, byInv);
  } else {
    // inverse move: (.., t_a, t_b, ..) -> (.., t_{t_a(b)}, t_a, ..)
    TwistWord by;
    by.surface = f.word.surface;
    by.letters.push_back(a);
    g.word.letters[i] = words::conjLetter(eng, b, by);
    g.word.letters[i + 1] = a;
  }
  return g;
}

// Literal-match substitution of one side of a relation by the other.
inline PositiveFactorization substitute(Engine& eng, const PositiveFactorization& f, size_t at,
                                        const Relation& r, RewriteDir dir = RewriteDir::LtoR) {
  const TwistWord& from = dir == RewriteDir::LtoR ? r.lhs : r.rhs;
  const TwistWord& to = dir == RewriteDir::LtoR ? r.rhs : r.lhs;
  if (at + from.letters.size() > f.word.letters.size())
    throw std::invalid_argument("substitute: match does not fit");
  for (size_t k = 0; k < from.letters.size(); ++k)
    if (!(f.word.letters[at + k] == from.letters[k]))
      throw std::invalid_argument("substitute: no literal match at index");
  PositiveFactorization g = f;
  g.word.letters.erase(g.word.letters.begin() + at,
                       g.word.letters.begin() + at + from.letters.size());
  g.word.letters.insert(g.word.letters.begin() + at, to.letters.begin(), to.letters.end());
  return g;
}

// Phi t_c = t_{Phi(c)} Phi as an explicit reversible rewrite: moves the
// letter at `at` leftward across the prefix [from, at) as its image.
inline PositiveFactorization conjugatePush(Engine& eng, const PositiveFactorization& f,
                                           size_t from, size_t at) {
  if (at >= f.word.letters.size() || from > at) throw std::out_of_range("conjugate_push");
  PositiveFactorization g = f;
  TwistWord phi;
  phi.surface = f.word.surface;
  phi.letters.assign(f.word.letters.begin() + from, f.word.letters.begin() + at);
  TwistLetterRef moved = words::conjLetter(eng, f.word.letters[at], phi);
  g.word.letters.erase(g.word.letters.begin() + at);
  g.word.letters.insert(g.word.letters.begin() + from, moved);
  return g;
}

}  // namespace mcg
