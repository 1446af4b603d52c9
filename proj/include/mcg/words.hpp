#pragma once

// Exact arithmetic in finitely generated free groups.
//
// A Letter packs generator index and sign into one int32 (index << 1 | signbit).
// FreeWord is a freely reduced letter array; reduction happens on construction
// and concatenation, so every FreeWord in the program is in normal form.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

struct Letter {
  int32_t code;  // (gen << 1) | (sign < 0)

  Letter() : code(0) {}
  Letter(int gen, int sign) : code((gen << 1) | (sign < 0)) {}

  int gen() const { return code >> 1; }
  int sign() const { return (code & 1) ? -1 : +1; }
  Letter inverse() const {
    Letter l;
    l.code = code ^ 1;
    return l;
  }
  bool operator==(const Letter&) const = default;
};

class FreeWord {
 public:
  FreeWord() = default;

  // Reduces on construction; accepts any letter sequence.
  explicit FreeWord(std::span<const Letter> letters) { append(letters); }
  explicit FreeWord(const std::vector<Letter>& letters)
      : FreeWord(std::span<const Letter>(letters)) {}

  static FreeWord generator(int gen, int sign = +1) {
    FreeWord w;
    w.letters_.push_back(Letter(gen, sign));
    return w;
  }

  static FreeWord identity() { return FreeWord(); }

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const Letter& operator[](size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  // Appends and cancels across the seam. Amortized O(cancellation).
  void append(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  void append(std::span<const Letter> ls) {
    for (const Letter& l : ls) append(l);
  }
  void append(const FreeWord& w) { append(std::span<const Letter>(w.letters_)); }
  void appendInverse(const FreeWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
      append(it->inverse());
  }

  FreeWord inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(it->inverse());
    return r;
  }

  FreeWord pow(int k) const {
    FreeWord r;
    FreeWord base = k >= 0 ? *this : inverse();
    for (int i = 0; i < std::abs(k); ++i) r.append(base);
    return r;
  }

  bool operator==(const FreeWord& o) const {
    if (letters_.size() != o.letters_.size()) return false;
    if (hash() != o.hash()) return false;  // advisory fast path
    return letters_ == o.letters_;
  }

  // 64-bit rolling hash; advisory only, equality always confirms letterwise.
  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (const Letter& l : letters_) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(l.code)) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

  // Exponent-sum vector of length rank.
  std::vector<int64_t> abelianize(int rank) const {
    std::vector<int64_t> v(rank, 0);
    for (const Letter& l : letters_) {
      if (l.gen() >= rank) throw std::out_of_range("letter outside rank");
      v[l.gen()] += l.sign();
    }
    return v;
  }

  // Cyclically reduced representative (conjugacy-class normal form carrier).
  FreeWord cyclicReduction() const {
    size_t a = 0, b = letters_.size();
    while (b - a >= 2 && letters_[a] == letters_[b - 1].inverse()) {
      ++a;
      --b;
    }
    FreeWord r;
    r.letters_.assign(letters_.begin() + a, letters_.begin() + b);
    return r;
  }

  std::string str() const {
    std::string s;
    for (const Letter& l : letters_) {
      if (!s.empty()) s += ' ';
      s += "g" + std::to_string(l.gen());
      if (l.sign() < 0) s += "'";
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Letter> letters_;
};

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  FreeWord r = u;
  r.append(v);
  return r;
}

// u * w * u^-1
inline FreeWord conjugate(const FreeWord& w, const FreeWord& u) {
  FreeWord r = u;
  r.append(w);
  r.appendInverse(u);
  return r;
}

// True iff u and v are conjugate, decided via cyclic reductions.
inline bool conjugateEqual(const FreeWord& u, const FreeWord& v) {
  FreeWord a = u.cyclicReduction(), b = v.cyclicReduction();
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t n = a.size();
  for (size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      ok = a[(shift + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace mcg

template <>
struct std::hash<mcg::FreeWord> {
  size_t operator()(const mcg::FreeWord& w) const { return static_cast<size_t>(w.hash()); }
};
