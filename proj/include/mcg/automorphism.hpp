#pragma once

// Automorphisms of a free group of given rank, extended by the images of the
// boundary arcs. A mapping class of Sigma_g^n fixing the boundary pointwise is
// faithfully encoded by (images of the 2g+n-1 pi1 generators, plus for each
// non-basepoint boundary component j a word u_j with Phi(gamma_j) = u_j *
// gamma_j, gamma_j the reference arc from the basepoint to that component).
// The pi1 action alone is blind to boundary twists when n >= 2; the arc words
// restore faithfulness.

#include <optional>
#include <vector>

#include "mcg/words.hpp"

namespace mcg {

struct Aut {
  int rank = 0;
  std::vector<FreeWord> images;     // size rank
  std::vector<FreeWord> arcImages;  // size = number of tracked arcs (n-1)

  static Aut identity(int rank, int arcs) {
    Aut a;
    a.rank = rank;
    a.images.resize(rank);
    for (int i = 0; i < rank; ++i) a.images[i] = FreeWord::generator(i);
    a.arcImages.assign(arcs, FreeWord::identity());
    return a;
  }

  bool isIdentity() const {
    for (int i = 0; i < rank; ++i)
      if (!(images[i] == FreeWord::generator(i))) return false;
    for (const FreeWord& u : arcImages)
      if (!u.empty()) return false;
    return true;
  }

  FreeWord apply(const FreeWord& w) const {
    FreeWord r;
    for (const Letter& l : w.letters()) {
      if (l.sign() > 0)
        r.append(images[l.gen()]);
      else
        r.appendInverse(images[l.gen()]);
    }
    return r;
  }

  // this o g : w |-> this(g(w)).
  Aut compose(const Aut& g) const {
    Aut r;
    r.rank = rank;
    r.images.reserve(rank);
    for (int i = 0; i < rank; ++i) r.images.push_back(apply(g.images[i]));
    r.arcImages.reserve(arcImages.size());
    for (size_t j = 0; j < arcImages.size(); ++j) {
      FreeWord u = apply(g.arcImages[j]);
      u.append(arcImages[j]);
      r.arcImages.push_back(std::move(u));
    }
    return r;
  }

  bool operator==(const Aut& o) const {
    return rank == o.rank && images == o.images && arcImages == o.arcImages;
  }

  uint64_t hash() const {
    uint64_t h = 0x243f6a8885a308d3ull ^ static_cast<uint64_t>(rank);
    auto mix = [&h](uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const FreeWord& w : images) mix(w.hash());
    for (const FreeWord& w : arcImages) mix(w.hash());
    return h;
  }

  size_t maxImageSize() const {
    size_t m = 0;
    for (const FreeWord& w : images) m = std::max(m, w.size());
    for (const FreeWord& w : arcImages) m = std::max(m, w.size());
    return m;
  }

  std::vector<std::vector<int64_t>> abelianizedMatrix() const {
    std::vector<std::vector<int64_t>> m;
    m.reserve(rank);
    for (int i = 0; i < rank; ++i) m.push_back(images[i].abelianize(rank));
    return m;  // m[i] = column of generator i's image
  }
};

// Inverts a basis tuple by greedy Nielsen length reduction, replaying the
// moves backwards on the standard basis. Works for any genuine automorphism
// that greedy reduction can unwind (all twist-generated ones in practice);
// returns nullopt when the step budget runs out or the tuple gets stuck,
// which signals corrupted input rather than looping.
inline std::optional<Aut> tryInverse(const Aut& f, size_t stepBudget = 1u << 20) {
  const int n = f.rank;
  std::vector<FreeWord> tuple = f.images;
  // Inverse built up as an automorphism acting on the standard basis.
  Aut inv = Aut::identity(n, 0);

  auto total = [&tuple]() {
    size_t s = 0;
    for (const FreeWord& w : tuple) s += w.size();
    return s;
  };

  size_t steps = 0;
  while (total() > static_cast<size_t>(n)) {
    if (++steps > stepBudget) return std::nullopt;
    bool improved = false;
    for (int i = 0; i < n && !improved; ++i) {
      for (int j = 0; j < n && !improved; ++j) {
        if (i == j) continue;
        for (int si : {+1, -1}) {
          // candidate move: tuple[i] <- tuple[i] * tuple[j]^si
          FreeWord cand = tuple[i];
          if (si > 0)
            cand.append(tuple[j]);
          else
            cand.appendInverse(tuple[j]);
          if (cand.size() < tuple[i].size()) {
            tuple[i] = std::move(cand);
            // Same move applied to the inverse-in-progress images.
            FreeWord im = inv.images[i];
            if (si > 0)
              im.append(inv.images[j]);
            else
              im.appendInverse(inv.images[j]);
            inv.images[i] = std::move(im);
            improved = true;
            break;
          }
          // candidate move: tuple[i] <- tuple[j]^si * tuple[i]
          FreeWord cand2 = si > 0 ? tuple[j] : tuple[j].inverse();
          cand2.append(tuple[i]);
          if (cand2.size() < tuple[i].size()) {
            tuple[i] = std::move(cand2);
            FreeWord im = si > 0 ? inv.images[j] : inv.images[j].inverse();
            im.append(inv.images[i]);
            inv.images[i] = std::move(im);
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) return std::nullopt;  // stuck before reaching a basis
  }

  // Now tuple[i] must be single letters forming a signed permutation.
  std::vector<FreeWord> result(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (tuple[i].size() != 1) return std::nullopt;
    int g = tuple[i][0].gen();
    int s = tuple[i][0].sign();
    if (g >= n || seen[g]) return std::nullopt;
    seen[g] = true;
    // f maps (pre-moves basis) so that position i holds x_g^s; invert that.
    result[g] = s > 0 ? inv.images[i] : inv.images[i].inverse();
  }

  Aut out;
  out.rank = n;
  out.images = std::move(result);
  // Arc words of the inverse: u'_j = out(u_j)^{-1}.
  out.arcImages.reserve(f.arcImages.size());
  for (const FreeWord& u : f.arcImages)
    out.arcImages.push_back(out.apply(u).inverse());

  // Round-trip check; failure reports corrupted input.
  Aut check = out.compose(f);
  if (!check.isIdentity()) return std::nullopt;
  return out;
}

}  // namespace mcg
