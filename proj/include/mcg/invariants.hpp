#pragma once

// Quantitative results: the length oracles of Theorems A/B/C, the
// Lefschetz-fibration invariants of a positive factorization, and the g <= 1
// abelianization bounds.

#include <optional>
#include <string>
#include <vector>

#include "mcg/relations.hpp"

namespace mcg {

// Element of N u {-inf, +inf}.
struct LengthValue {
  enum Kind { Finite, PlusInf, MinusInf } kind = Finite;
  long long value = 0;

  static LengthValue finite(long long v) { return {Finite, v}; }
  static LengthValue plusInf() { return {PlusInf, 0}; }
  static LengthValue minusInf() { return {MinusInf, 0}; }
  bool operator==(const LengthValue&) const = default;

  std::string str() const {
    if (kind == PlusInf) return "+inf";
    if (kind == MinusInf) return "-inf";
    return std::to_string(value);
  }
};

// L(Delta) for the boundary multitwist on Sigma_g^n (Theorem A). For g = 0
// there are no nonseparating curves, so Delta admits no factorization along
// them: -inf by convention.
inline LengthValue lengthOracle(int g, int n) {
  if (n < 1) throw std::invalid_argument("length_oracle: n >= 1");
  if (g < 0) throw std::invalid_argument("length_oracle: g >= 0");
  if (g == 0) return LengthValue::minusInf();
  if (g == 1 && n > 9) return LengthValue::minusInf();
  if (g >= 2 && n > 4 * g + 4) return LengthValue::minusInf();
  if (n <= 2 * g - 4) return LengthValue::plusInf();
  if (g == 1) return LengthValue::finite(12);
  if (g == 2) return LengthValue::finite(40);
  if (g <= 6) return LengthValue::finite(6 * g + 18);
  return LengthValue::finite(8 * g + 4);
}

// L(Delta^k) (Theorem B plus the nonpositive-power proposition). Cases the
// paper leaves open are reported as unspecified rather than extrapolated.
struct PowerOracleResult {
  std::optional<LengthValue> value;
  std::string note;
};

inline PowerOracleResult powerOracle(int g, int n, int k) {
  PowerOracleResult r;
  if (n < 1) throw std::invalid_argument("power_oracle: n >= 1");
  if (k < 0) {
    r.value = LengthValue::minusInf();
    return r;
  }
  if (k == 0) {
    r.value = LengthValue::finite(0);
    return r;
  }
  if (k == 1) {
    r.value = lengthOracle(g, n);
    return r;
  }
  if (g == 0) {
    r.value = LengthValue::minusInf();
    return r;
  }
  if (g == 1 && n <= 9) {
    r.value = LengthValue::finite(12ll * k);
    return r;
  }
  if (g >= 2) {
    r.value = LengthValue::plusInf();
    return r;
  }
  r.note = "unspecified-by-paper (g = 1, n > 9, k >= 2)";
  return r;
}

enum class ImageDescriptor {
  EmptyPositive,     // g = 0, n = 1: no homologically essential curves
  NaturalsMinusInf,  // N u {-inf}
  NaturalsBothInf    // N u {+-inf}
};

inline ImageDescriptor imageDescriptor(int g, int n) {
  if (n < 1) throw std::invalid_argument("image_descriptor: n >= 1");
  if (g == 0 && n == 1) return ImageDescriptor::EmptyPositive;
  if (g <= 1) return ImageDescriptor::NaturalsMinusInf;
  return ImageDescriptor::NaturalsBothInf;
}

inline std::string str(ImageDescriptor d) {
  switch (d) {
    case ImageDescriptor::EmptyPositive: return "empty (no positive factorizations exist)";
    case ImageDescriptor::NaturalsMinusInf: return "N u {-inf}";
    default: return "N u {-inf, +inf}";
  }
}

// --- fibration invariants ---------------------------------------------------

struct FibrationInvariants {
  long long euler = 0;
  int h1Rank = 0;
  std::vector<int64_t> h1Torsion;
  size_t length = 0;
};

// Checks that the target is a (power of a) boundary multitwist word.
inline bool isBoundaryMultitwist(const Engine& eng, const TwistWord& target) {
  for (const auto& l : target.letters) {
    const Curve& c = eng.registry().curve(l.curve);
    if (l.sign != +1) return false;
    if (c.name.rfind("delta", 0) != 0) return false;
  }
  return true;
}

// e(X) = 4 - 4g + l for the fibration with capped fiber; H_1(X) is the
// cokernel of the 2g x l integer matrix of capped vanishing-cycle classes.
inline FibrationInvariants fibrationInvariants(Engine& eng, const PositiveFactorization& f,
                                               const TwistWord* target = nullptr) {
  const SurfaceSpec spec = eng.registry().model.spec;
  if (target && !isBoundaryMultitwist(eng, *target))
    throw std::invalid_argument("fibration_invariants: target is not a boundary multitwist");
  FibrationInvariants inv;
  inv.length = f.word.letters.size();
  inv.euler = 4 - 4ll * spec.g + static_cast<long long>(inv.length);
  std::vector<std::vector<int64_t>> m(2 * spec.g,
                                      std::vector<int64_t>(inv.length, 0));
  size_t j = 0;
  for (const auto& l : f.word.letters) {
    HomologyClass c = eng.registry().curveClass(l.curve);
    for (int i = 0; i < 2 * spec.g; ++i) m[i][j] = c[i];
    ++j;
  }
  SmithResult smith = spec.g ? smithNormalForm(std::move(m)) : SmithResult{};
  inv.h1Rank = 2 * spec.g - smith.rank;
  inv.h1Torsion = smith.torsion();
  return inv;
}

// --- g <= 1 abelianization bounds --------------------------------------------

inline FreeWord killEps(const FreeWord& w, const SurfaceSpec& spec) {
  FreeWord r;
  for (const Letter& l : w.letters())
    if (l.gen() < 2 * spec.g) r.append(l);
  return r;
}

// pi1 word of a curve (base word pushed through realized conjugators).
inline FreeWord curvePi1Word(Engine& eng, int curve) {
  const Registry& reg = eng.registry();
  const Curve& c = reg.curve(curve);
  if (c.basic) return reg.model.polyWord(c.geom.poly);
  TwistWord conj;
  conj.surface = reg.model.spec;
  for (auto& [ci, s] : c.conj) conj.letters.push_back({ci, s});
  return eng.realize(conj).apply(curvePi1Word(eng, c.base));
}

struct AbelianizedBound {
  bool applicable = false;
  long long value = 0;
  std::string note;
};

// g = 1: the image of the word in H_1(Gamma_1^1) = Z after capping all
// interior boundary components: nonseparating twists count 1, the boundary
// twist counts 12, capped-trivial twists count 0. This is the fixed length of
// every factorization into nonseparating twists. g = 0: the sum over interior
// components of capped twist counts, an upper bound for the essential length.
inline AbelianizedBound abelianizedBound(Engine& eng, const TwistWord& w) {
  const SurfaceSpec spec = eng.registry().model.spec;
  AbelianizedBound out;
  if (spec.g >= 2) {
    out.note = "refused: no abelianization bound exists for g >= 2";
    return out;
  }
  out.applicable = true;
  if (spec.g == 1) {
    FreeWord rel = killEps(eng.boundaryWord(), spec);
    long long total = 0;
    for (const auto& l : w.letters) {
      HomologyClass c = eng.registry().curveClass(l.curve);
      if (c[0] != 0 || c[1] != 0) {
        total += l.sign;
        continue;
      }
      FreeWord cw = killEps(curvePi1Word(eng, l.curve), spec);
      if (conjugateEqual(cw, rel) || conjugateEqual(cw, rel.inverse())) total += 12ll * l.sign;
    }
    out.value = total;
    return out;
  }
  // sum of the capping-homomorphism images over the interior components
  long long total = 0;
  for (const auto& l : w.letters) {
    HomologyClass c = eng.registry().curveClass(l.curve);
    for (int j = 0; j < spec.n - 1; ++j)
      if (c[j] != 0) total += l.sign;
  }
  out.value = total;
  return out;
}

}  // namespace mcg
