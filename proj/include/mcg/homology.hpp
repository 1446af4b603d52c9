#pragma once

// H_1(Sigma_g^n) = Z^{2g+n-1} in the basis A_1,B_1,...,A_g,B_g,E_1,...,E_{n-1},
// with the intersection pairing <A_i,B_i> = 1 and the boundary classes E_j in
// the radical. Dehn twists act by transvections x |-> x + <x,[c]>[c].

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcg {

struct SurfaceSpec {
  int g = 0;
  int n = 1;

  int rank() const { return 2 * g + n - 1; }
  int arcs() const { return n - 1; }
  bool operator==(const SurfaceSpec&) const = default;
};

using HomologyClass = std::vector<int64_t>;

inline int64_t pairing(const SurfaceSpec& s, const HomologyClass& x, const HomologyClass& y) {
  if (static_cast<int>(x.size()) != s.rank() || static_cast<int>(y.size()) != s.rank())
    throw std::invalid_argument("pairing: dimension mismatch");
  int64_t p = 0;
  for (int i = 0; i < s.g; ++i)
    p += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  return p;
}

// Row-major square integer matrix.
struct IntMat {
  int n = 0;
  std::vector<int64_t> a;

  static IntMat identity(int n) {
    IntMat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  IntMat operator*(const IntMat& o) const {
    IntMat r;
    r.n = n;
    r.a.assign(a.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int64_t v = at(i, k);
        if (!v) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }
  HomologyClass apply(const HomologyClass& x) const {
    HomologyClass y(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
    return y;
  }
  bool operator==(const IntMat&) const = default;

  int64_t det() const;  // Bareiss, exact
};

inline int64_t IntMat::det() const {
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = at(i, j);
  int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Transvection matrix of a positive twist along class v: x |-> x + <x,v>v.
inline IntMat transvection(const SurfaceSpec& s, const HomologyClass& v, int sign = +1) {
  IntMat m = IntMat::identity(s.rank());
  for (int j = 0; j < s.rank(); ++j) {
    HomologyClass ej(s.rank(), 0);
    ej[j] = 1;
    int64_t c = sign * pairing(s, ej, v);
    for (int i = 0; i < s.rank(); ++i) m.at(i, j) += c * v[i];
  }
  return m;
}

// Smith-normal-form style reduction of an arbitrary integer matrix (rows x
// cols, row-major). Returns the nontrivial elementary divisors and the rank.
struct SmithResult {
  int rank = 0;
  std::vector<int64_t> divisors;  // d_1 | d_2 | ..., entries > 1 only in torsion()
  std::vector<int64_t> torsion() const {
    std::vector<int64_t> t;
    for (int64_t d : divisors)
      if (d > 1) t.push_back(d);
    return t;
  }
};

inline SmithResult smithNormalForm(std::vector<std::vector<int64_t>> m) {
  SmithResult res;
  if (m.empty()) return res;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0, c = 0;
  auto absv = [](int64_t v) { return v < 0 ? -v : v; };
  while (r < rows && c < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    size_t pr = rows, pc = cols;
    int64_t best = 0;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || absv(m[i][j]) < best)) {
          best = absv(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[r], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        int64_t q = m[i][c] / m[r][c];
        if (q)
          for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) {
          std::swap(m[r], m[i]);
          clean = false;
        }
      }
      for (size_t j = c + 1; j < cols; ++j) {
        int64_t q = m[r][j] / m[r][c];
        if (q)
          for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
          clean = false;
        }
      }
    }
    res.divisors.push_back(absv(m[r][c]));
    ++r;
    ++c;
  }
  res.rank = static_cast<int>(res.divisors.size());
  // enforce divisibility chain
  for (size_t i = 0; i + 1 < res.divisors.size(); ++i)
    for (size_t j = i + 1; j < res.divisors.size(); ++j) {
      int64_t a = res.divisors[i], b = res.divisors[j];
      if (a == 0 || b == 0) continue;
      auto gcd = [](int64_t x, int64_t y) {
        while (y) {
          int64_t t = x % y;
          x = y;
          y = t;
        }
        return x < 0 ? -x : x;
      };
      int64_t g = gcd(a, b);
      int64_t l = a / g * b;
      res.divisors[i] = g;
      res.divisors[j] = l;
    }
  return res;
}

}  // namespace mcg
