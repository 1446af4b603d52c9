#pragma once

// Mapping-class words over a registry and their exact / homology realizations.
//
// A TwistWord is written left-to-right with the rightmost letter acting first
// (Phi = t_{c_l} ... t_{c_1}). The exact tier realizes words as marked
// automorphisms (pi1 images plus boundary-arc words); the homology tier
// multiplies transvection matrices. Derived-curve letters expand as
// t_{Phi(c)} = Phi t_c Phi^{-1}, with realized conjugators memoized.

#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcg/automorphism.hpp"
#include "mcg/stdcurves.hpp"

namespace mcg {

struct TwistLetterRef {
  int curve = -1;
  int sign = +1;
  bool operator==(const TwistLetterRef&) const = default;
};

struct TwistWord {
  SurfaceSpec surface;
  std::vector<TwistLetterRef> letters;

  size_t size() const { return letters.size(); }
  TwistWord inverse() const {
    TwistWord w;
    w.surface = surface;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      w.letters.push_back({it->curve, -it->sign});
    return w;
  }
  TwistWord& operator*=(const TwistWord& o) {
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
  }
  friend TwistWord operator*(TwistWord a, const TwistWord& b) { return a *= b; }
  TwistWord pow(int k) const {
    TwistWord r;
    r.surface = surface;
    const TwistWord base = k >= 0 ? *this : inverse();
    for (int i = 0; i < std::abs(k); ++i) r *= base;
    return r;
  }
  bool allPositive() const {
    for (const auto& l : letters)
      if (l.sign != +1) return false;
    return true;
  }
};

struct ResourceExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Engine {
 public:
  explicit Engine(Registry& reg) : reg_(reg) {
    if (const char* env = std::getenv("MCG_LETTER_BUDGET"))
      letterBudget_ = std::strtoull(env, nullptr, 10);
  }

  const Registry& registry() const { return reg_; }
  Registry& registry() { return reg_; }
  size_t letterBudget() const { return letterBudget_; }
  void setLetterBudget(size_t b) { letterBudget_ = b; }
  size_t workCounter() const { return work_; }

  TwistWord word(std::initializer_list<std::pair<const char*, int>> ls) const {
    TwistWord w;
    w.surface = reg_.model.spec;
    for (auto& [name, sign] : ls) w.letters.push_back({reg_.require(name), sign});
    return w;
  }
  TwistWord letter(const std::string& name, int sign = +1) const {
    TwistWord w;
    w.surface = reg_.model.spec;
    w.letters.push_back({reg_.require(name), sign});
    return w;
  }

  // --- exact tier ----------------------------------------------------------

  const Aut& curveTwist(int curve, int sign) {
    auto key = std::make_pair(curve, sign);
    auto it = twistCache_.find(key);
    if (it != twistCache_.end()) return it->second;
    const Curve& c = reg_.curve(curve);
    Aut a;
    if (c.basic) {
      a = basicTwistAut(c, sign);
    } else {
      TwistWord conj;
      conj.surface = reg_.model.spec;
      for (auto& [ci, s] : c.conj) conj.letters.push_back({ci, s});
      Aut phi = realize(conj);
      Aut phiInv = realize(conj.inverse());
      const Aut& base = curveTwist(c.base, sign);
      a = phi.compose(base).compose(phiInv);
    }
    return twistCache_.emplace(key, std::move(a)).first->second;
  }

  Aut realize(const TwistWord& w) {
    checkSurface(w);
    Aut acc = Aut::identity(reg_.model.spec.rank(), reg_.model.spec.arcs());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      acc = curveTwist(it->curve, it->sign).compose(acc);
      bump(acc);
    }
    return acc;
  }

  // realized with conjugator memoization keyed by word hash; used heavily by
  // the factorization generators which reuse L_16, Psi_1, Psi_2
  const Aut& realizeMemo(const TwistWord& w) {
    uint64_t h = wordHash(w);
    auto it = memo_.find(h);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(h, realize(w)).first->second;
  }

  bool equalExact(const TwistWord& u, const TwistWord& v) {
    return realize(u) == realize(v);
  }
  bool isIdentity(const TwistWord& u) { return realize(u).isIdentity(); }

  // --- homology tier ---------------------------------------------------------

  IntMat homologyMatrix(const TwistWord& w) {
    checkSurface(w);
    IntMat acc = IntMat::identity(reg_.model.spec.rank());
    // rightmost acts first: M(w) = M(l0) * M(l1) * ... * M(l_{k-1})
    for (const auto& l : w.letters) {
      IntMat t = transvection(reg_.model.spec, reg_.curveClass(l.curve), l.sign);
      acc = acc * t;
    }
    return acc;
  }
  bool equalHomology(const TwistWord& u, const TwistWord& v) {
    return homologyMatrix(u) == homologyMatrix(v);
  }

  // Every mapping class must fix the basepoint boundary word and send the
  // other boundary words to conjugates; exposed for the validation suite.
  FreeWord boundaryWord() const { return reg_.model.polyWord(reg_.rimPoly); }

 private:
  Registry& reg_;
  size_t letterBudget_ = 10'000'000;
  size_t work_ = 0;
  std::map<std::pair<int, int>, Aut> twistCache_;
  std::unordered_map<uint64_t, Aut> memo_;

  void checkSurface(const TwistWord& w) const {
    if (!(w.surface == reg_.model.spec))
      throw std::invalid_argument("twist word bound to a different surface");
  }

  void bump(const Aut& a) {
    size_t m = a.maxImageSize();
    work_ += m;
    if (m > letterBudget_)
      throw ResourceExhausted("generator image exceeded the letter budget (" +
                              std::to_string(letterBudget_) + ")");
  }

  uint64_t wordHash(const TwistWord& w) const {
    uint64_t h = 0x9ae16a3b2f90404full;
    for (const auto& l : w.letters) {
      h ^= static_cast<uint64_t>(l.curve * 2 + (l.sign < 0)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }

  Aut basicTwistAut(const Curve& c, int sign) {
    const SurfaceModel& m = reg_.model;
    Aut a;
    a.rank = m.spec.rank();
    a.images.reserve(a.rank);
    for (int i = 0; i < a.rank; ++i)
      a.images.push_back(twistImageWord(m, c.geom, sign, reg_.genPolys[i]));
    a.arcImages.reserve(m.spec.arcs());
    for (int j = 0; j < m.spec.arcs(); ++j)
      a.arcImages.push_back(twistImageWord(m, c.geom, sign, reg_.arcPolys[j]));
    return a;
  }
};

struct VerifyReport {
  bool homologyEqual = false;
  std::optional<bool> exactEqual;
  size_t lhsLetters = 0, rhsLetters = 0;
  double millis = 0;
  std::string error;

  bool verified() const { return exactEqual.value_or(false); }
};

enum class VerifyLevel { Homology, Exact };

inline VerifyReport verifyEqual(Engine& eng, const TwistWord& lhs, const TwistWord& rhs,
                                VerifyLevel level = VerifyLevel::Exact) {
  VerifyReport rep;
  rep.lhsLetters = lhs.size();
  rep.rhsLetters = rhs.size();
  auto t0 = std::chrono::steady_clock::now();
  try {
    rep.homologyEqual = eng.equalHomology(lhs, rhs);
    if (level == VerifyLevel::Exact) rep.exactEqual = eng.equalExact(lhs, rhs);
  } catch (const ResourceExhausted& e) {
    rep.error = e.what();
  }
  rep.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace mcg
