#pragma once

// The arbitrarily long positive factorizations of boundary multitwists, the
// boundary inflation lemma, and the baseline pencil factorizations. Every
// generator output is engine-verified against its target mapping class and
// carries a replayable trace of the identities used.

#include <optional>
#include <string>
#include <vector>

#include "mcg/relations.hpp"

namespace mcg {

struct TraceStep {
  std::string rule;    // identity or move applied
  TwistWord before, after;  // equal as mapping classes; re-verified on replay
};

struct GeneratedFactorization {
  PositiveFactorization fact;
  TwistWord target;
  std::vector<TraceStep> trace;
  size_t length() const { return fact.word.letters.size(); }
};

namespace fact_detail {

inline void requireVerified(Engine& eng, const TwistWord& lhs, const TwistWord& rhs,
                            const std::string& what) {
  if (!eng.equalExact(lhs, rhs))
    throw std::logic_error("construction step failed verification: " + what);
}

inline TwistWord multitwist(Engine& eng, int count) {
  TwistWord w;
  w.surface = eng.registry().model.spec;
  for (int j = 1; j <= count; ++j) w *= eng.letter("delta" + std::to_string(j));
  return w;
}

// Substitutes literal t_{c1}/t_{a'} letters for their Psi-images inside a
// conjugated word, so that the swapped word exposes cancellable letters.
inline TwistWord conjWordSwapping(Engine& eng, const TwistWord& w, const TwistWord& psi,
                                  int curA, int curB) {
  TwistWord r;
  r.surface = w.surface;
  for (const auto& l : w.letters) {
    if (l.curve == curA)
      r.letters.push_back({curB, l.sign});
    else if (l.curve == curB)
      r.letters.push_back({curA, l.sign});
    else
      r.letters.push_back(words::conjLetter(eng, l, psi));
  }
  return r;
}

// Cancels one inverse twist t_c^{-1} appended after `w` into the rightmost
// literal t_c letter, conjugating everything it passes. Exact: w * t_c^{-1}
// equals the returned positive word.
inline TwistWord absorbInverse(Engine& eng, TwistWord w, int curve) {
  TwistWord conj;
  conj.surface = w.surface;
  conj.letters.push_back({curve, +1});
  for (size_t i = w.letters.size(); i-- > 0;) {
    if (w.letters[i].curve == curve && w.letters[i].sign == +1) {
      // t_c * (tail) * t_c^{-1} = conj(tail); drop the letter
      TwistWord tail;
      tail.surface = w.surface;
      tail.letters.assign(w.letters.begin() + i + 1, w.letters.end());
      TwistWord out;
      out.surface = w.surface;
      out.letters.assign(w.letters.begin(), w.letters.begin() + i);
      out *= words::conjWord(eng, tail, conj);
      return out;
    }
  }
  throw std::logic_error("absorbInverse: no literal positive letter to cancel");
}

}  // namespace fact_detail

// Lemma "boundary inflation": given U * t_beta = T * t_alpha^{l-1} t_alpha'
// on the configured surface, returns the verified relation
// U * t_{delta_1} .. t_{delta_l} = T * t_{x_1} .. t_{x_l}.
inline Relation boundaryInflate(Engine& eng, const TwistWord& U, const TwistWord& T,
                                bool eSide = false,
                                std::vector<TraceStep>* trace = nullptr) {
  const Registry& reg = eng.registry();
  const auto& cfgOpt = eSide ? reg.cfgE : reg.cfgD;
  if (!cfgOpt) throw std::invalid_argument("boundary_inflate: configuration not registered");
  const Registry::DaisyConfig& cfg = *cfgOpt;
  const int l = static_cast<int>(cfg.petalHoles.size());

  TwistWord tAlpha = eng.letter(reg.curve(cfg.alpha).name);
  TwistWord tAlphaP = eng.letter(reg.curve(cfg.alphaPrime).name);
  TwistWord tBeta = eng.letter(reg.curve(cfg.beta).name);
  TwistWord hypLhs = U * tBeta;
  TwistWord hypRhs = T * tAlpha.pow(l - 1) * tAlphaP;
  if (!eng.equalExact(hypLhs, hypRhs))
    throw std::invalid_argument("boundary_inflate: hypothesis relation fails verification");

  // the embedded daisy: t_alpha^{l-1} prod t_{delta_j} t_alpha' = prod t_{x_i} t_beta
  TwistWord daisyLhs = tAlpha.pow(l - 1);
  for (int hole : cfg.petalHoles) daisyLhs *= eng.letter("delta" + std::to_string(hole));
  daisyLhs *= tAlphaP;
  TwistWord daisyRhs;
  daisyRhs.surface = U.surface;
  for (int xc : cfg.xCurves) daisyRhs *= eng.letter(reg.curve(xc).name);
  daisyRhs *= tBeta;
  fact_detail::requireVerified(eng, daisyLhs, daisyRhs, "embedded daisy relation");

  Relation out;
  out.name = "boundary_inflate";
  out.params = {{"l", l}, {"eSide", eSide ? 1 : 0}};
  out.lhs = U;
  for (int hole : cfg.petalHoles) out.lhs *= eng.letter("delta" + std::to_string(hole));
  out.rhs = T;
  for (int xc : cfg.xCurves) out.rhs *= eng.letter(reg.curve(xc).name);
  if (trace) {
    trace->push_back({"hypothesis U t_beta = T t_alpha^{l-1} t_alpha'", hypLhs, hypRhs});
    trace->push_back({"embedded daisy relation", daisyLhs, daisyRhs});
    trace->push_back({"cancel t_beta after central reordering", out.lhs, out.rhs});
  }
  fact_detail::requireVerified(eng, out.lhs, out.rhs, "boundary_inflate conclusion");
  return out;
}

// Theorem 1 family: positive factorization of t_{delta_1} .. t_{delta_{2g-4}}
// in Gamma_g^{2g-4} with 6g+18+10m letters. Callers pass a registry built
// with Registry({g, 2g-4}, g-2).
inline GeneratedFactorization genTheorem1(Engine& eng, int m) {
  using namespace words;
  const SurfaceSpec spec = eng.registry().model.spec;
  const int g = spec.g;
  if (g < 4) throw std::invalid_argument("theorem1: g >= 4 (the paper's proof starts there)");
  if (m < 1) throw std::invalid_argument("theorem1: m >= 1");
  if (spec.n != 2 * g - 4 || eng.registry().model.nA != g - 2)
    throw std::invalid_argument("theorem1: registry must be Sigma_g^{2g-4} split (g-2, g-3)");

  GeneratedFactorization out;
  out.target = fact_detail::multitwist(eng, 2 * g - 4);

  TwistWord L = L16(eng);
  TwistWord h2 = (g % 2 == 0) ? H(eng, 3).pow(2) : Hbar(eng, 3).pow(2);
  TwistWord Z, W;
  Z.surface = W.surface = spec;
  for (int xc : eng.registry().cfgD->xCurves) Z *= eng.letter(eng.registry().curve(xc).name);
  for (int xc : eng.registry().cfgE->xCurves) W *= eng.letter(eng.registry().curve(xc).name);

  // Delta = K_4 (H_5)^4 I J L_16 (H_3)^2 Z W   (prop1 + two boundary inflations)
  TwistWord base = K4(eng) * chain(eng, 1, 5).pow(4) * Iblock(eng, g) * Jblock(eng, g) * L *
                   h2 * Z * W;
  out.trace.push_back({"prop1 inflated along both boundary spheres", out.target, base});

  // conjugate by L_16 (the target is central) and substitute lemma long1 for
  // L_16 (H_5)^4
  TwistWord front = conjWord(eng, K4(eng), L) * phi12m(eng, m) * T10(eng, m) * M9(eng) *
                    eng.word({{"c5", 1}, {"c3", 1}, {"c4", 1}, {"c2", 1}, {"c3", 1}});
  TwistWord backParity = conjWord(eng, h2, L);
  TwistWord word = front * Iblock(eng, g) * Jblock(eng, g) * backParity *
                   conjWord(eng, Z, L) * conjWord(eng, W, L);
  out.trace.push_back({"conjugate by L_16 and substitute long1", base, word});

  out.fact.word = word;
  out.fact.nonseparatingOnly = true;
  fact_detail::requireVerified(eng, out.fact.word, out.target, "theorem1 output");
  return out;
}

// Theorem 2 family: positive factorization of Delta * t_a (a = c_4 for g = 2,
// a = d' for g >= 3) in Gamma_g^n. Registry: Registry({g, n}, n-1).
inline GeneratedFactorization genTheorem2(Engine& eng, int m) {
  using namespace words;
  const SurfaceSpec spec = eng.registry().model.spec;
  const int g = spec.g, n = spec.n;
  if (g < 2 || n < 2) throw std::invalid_argument("theorem2: g >= 2, n >= 2");
  if (!(m > 2 * (n - 2) + 2)) throw std::invalid_argument("theorem2: m > 2(n-2)+2");

  GeneratedFactorization out;
  if (g == 2) {
    out.target = fact_detail::multitwist(eng, n) * eng.letter("c4");
    out.fact.word = RelationCatalog::g2RightSide(eng, m, n);
    out.trace.push_back({"relation (g2): DKP + (H) + boundary inflation", out.target,
                         out.fact.word});
  } else {
    out.target = fact_detail::multitwist(eng, n) * eng.letter("dp");
    TwistWord Pp = conjWord(eng, RelationCatalog::Pblock(eng), eng.letter("d").pow(n - 2));
    out.fact.word = D9(eng) * phi12m(eng, m) * Oblock(eng, m, n) * eng.letter("c1").pow(2) *
                    eng.letter("e").pow(n - 2) * Pp;
    for (int j = 1; j <= n - 1; ++j) out.fact.word *= eng.letter("x" + std::to_string(j));
    out.trace.push_back({"relation (relation4): DKP + (H) + chain coils + inflation",
                         out.target, out.fact.word});
  }
  out.fact.nonseparatingOnly = true;
  fact_detail::requireVerified(eng, out.fact.word, out.target, "theorem2 output");
  return out;
}

// Half-twist word along a chain of curves: maps the first chain curve to the
// last. Used to build the swap classes Psi_1, Psi_2.
inline TwistWord halfTwist(Engine& eng, const std::vector<std::string>& chainCurves) {
  TwistWord w;
  w.surface = eng.registry().model.spec;
  for (size_t k = 1; k <= chainCurves.size(); ++k)
    for (size_t i = k; i-- > 0;) w *= eng.letter(chainCurves[i]);
  return w;
}

// Theorem 3 family: positive factorization of Delta^k in Gamma_g^n.
inline GeneratedFactorization genTheorem3(Engine& eng, int k, int m) {
  using namespace fact_detail;
  const SurfaceSpec spec = eng.registry().model.spec;
  const int g = spec.g, n = spec.n;
  if (g < 2 || n < 2 || k < 2) throw std::invalid_argument("theorem3: g,n >= 2, k >= 2");
  if (!(m > 2 * (n - 2) + 2)) throw std::invalid_argument("theorem3: m > 2(n-2)+2");

  if (k >= 4) {
    // k = 2q + 3eps: concatenate q copies of the k=2 word and eps of the k=3 word
    int eps = k % 2, q = (k - 3 * eps) / 2;
    GeneratedFactorization two = genTheorem3(eng, 2, m);
    GeneratedFactorization out;
    out.target = fact_detail::multitwist(eng, n).pow(k);
    out.fact.nonseparatingOnly = true;
    out.fact.word.surface = spec;
    for (int i = 0; i < q; ++i) out.fact.word *= two.fact.word;
    if (eps) out.fact.word *= genTheorem3(eng, 3, m).fact.word;
    out.trace.push_back({"concatenation k = 2q + 3eps", out.target, out.fact.word});
    requireVerified(eng, out.fact.word, out.target, "theorem3 output");
    return out;
  }

  // base relation Delta * t_a = base (a = c4 / dp)
  GeneratedFactorization base = genTheorem2(eng, m);
  const std::string aName = g == 2 ? "c4" : "dp";
  int aIdx = eng.registry().require(aName);
  int c1Idx = eng.registry().require("c1");

  // swap class Psi with Psi(a) = c1, Psi(c1) = a
  std::vector<std::string> chainNames = {"c1", "c2", "c3", aName};
  if (g >= 3) chainNames = {"c1", "c2", "c3", "c4", "dp"};
  TwistWord psi = halfTwist(eng, chainNames);
  requireVerified(eng, psi * eng.letter(aName) * psi.inverse(), eng.letter("c1"),
                  "Psi swaps a -> c1");
  requireVerified(eng, psi * eng.letter("c1") * psi.inverse(), eng.letter(aName),
                  "Psi swaps c1 -> a");

  TwistWord swapped = conjWordSwapping(eng, base.fact.word, psi, c1Idx, aIdx);

  GeneratedFactorization out;
  out.target = multitwist(eng, n).pow(k);
  // Delta^k t_a^{k-1} t_{c1} = base^{k-1} * swapped; cancel the spare letters
  TwistWord word;
  word.surface = spec;
  for (int i = 0; i < k - 1; ++i) word *= base.fact.word;
  word *= swapped;
  out.trace.push_back({"(Delta t_a)^{k-1} (Delta t_{c1}) via the swap class Psi",
                       out.target * eng.letter(aName).pow(k - 1) * eng.letter("c1"), word});
  word = absorbInverse(eng, word, c1Idx);
  for (int i = 0; i < k - 1; ++i) word = absorbInverse(eng, word, aIdx);
  out.trace.push_back({"cancel t_a^{k-1} t_{c1} from both sides", out.target, word});

  out.fact.word = word;
  out.fact.nonseparatingOnly = true;
  requireVerified(eng, out.fact.word, out.target, "theorem3 output");
  return out;
}

// chain pencil: t_{delta_1} t_{delta_2} = (t_{c_1} .. t_{c_{2g+1}})^{2g+2} in
// Gamma_g^2, length (2g+1)(2g+2)
inline GeneratedFactorization genChainPencil(Engine& eng) {
  const SurfaceSpec spec = eng.registry().model.spec;
  if (spec.n != 2 || spec.g < 1) throw std::invalid_argument("chain pencil: Sigma_g^2");
  GeneratedFactorization out;
  out.target = fact_detail::multitwist(eng, 2);
  out.fact.word = words::chain(eng, 1, 2 * spec.g + 1).pow(2 * spec.g + 2);
  out.trace.push_back({"chain relation", out.target, out.fact.word});
  fact_detail::requireVerified(eng, out.fact.word, out.target, "chain pencil");
  return out;
}

// elliptic: t_delta^k = (t_a t_b)^{6k} in Gamma_1^1, length 12k
inline GeneratedFactorization genElliptic(Engine& eng, int k) {
  const SurfaceSpec spec = eng.registry().model.spec;
  if (!(spec.g == 1 && spec.n == 1)) throw std::invalid_argument("elliptic: Sigma_1^1");
  if (k < 1) throw std::invalid_argument("elliptic: k >= 1");
  GeneratedFactorization out;
  out.target = eng.letter("delta1").pow(k);
  out.fact.word = (eng.letter("a") * eng.letter("b")).pow(6 * k);
  out.trace.push_back({"one-boundary chain relation, k-th power", out.target, out.fact.word});
  fact_detail::requireVerified(eng, out.fact.word, out.target, "elliptic factorization");
  return out;
}

}  // namespace mcg
