#pragma once

// vol_d P for P = { x : <a_l, x> <= b_l } by recursive facet decomposition,
//   vol_d P = (1/d) sum_i b_i / |a_ij| * vol_{d-1}(P cap H_i in coordinates x_{-j}),
// where x_j is eliminated on H_i with j the largest entry of a_i. Works for
// any scalar; the policy decides when a restricted normal counts as zero.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "cubesec/detail/lattice.hpp"

namespace cubesec::detail {

// Nearly parallel pairs trade two errors: treating them as parallel costs a
// wedge of relative size ~tol, keeping them places their intersection with
// error ~eps/tol. 1e-8 balances both near sqrt(machine epsilon).
struct FloatParallel {
  double tol = 1e-8;
  bool zero(double size, double scale) const { return size <= tol * scale; }
  bool nonpositive(double rhs, double scale) const { return rhs <= tol * scale; }
  bool negative(double rhs, double scale) const { return rhs < -tol * scale; }
};

template <class Scalar>
struct ExactParallel {
  bool zero(const Scalar& size, const Scalar&) const { return size == 0; }
  bool nonpositive(const Scalar& rhs, const Scalar&) const { return rhs <= 0; }
  bool negative(const Scalar& rhs, const Scalar&) const { return rhs < 0; }
};

/// Empty when some 1-dimensional slice is unbounded.
template <class Scalar, class Parallel>
std::optional<Scalar> recursive_volume(int d, const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                        const Parallel& par) {
  const int m = static_cast<int>(b.size());
  if (d == 1) {
    bool has_lo = false, has_hi = false;
    Scalar lo = 0, hi = 0;
    for (int l = 0; l < m; ++l) {
      if (a[l] > 0) {
        const Scalar t = b[l] / a[l];
        if (!has_hi || t < hi) hi = t;
        has_hi = true;
      } else if (a[l] < 0) {
        const Scalar t = b[l] / a[l];
        if (!has_lo || t > lo) lo = t;
        has_lo = true;
      } else if (b[l] < 0) {
        return Scalar(0);
      }
    }
    if (!has_lo || !has_hi) return std::nullopt;
    return hi > lo ? Scalar(hi - lo) : Scalar(0);
  }

  Scalar total = 0;
  std::vector<Scalar> ar, br;
  for (int i = 0; i < m; ++i) {
    const Scalar* ai = a.data() + static_cast<std::size_t>(i) * d;
    int j = 0;
    for (int c = 1; c < d; ++c)
      if (magnitude(ai[c]) > magnitude(ai[j])) j = c;
    if (ai[j] == 0) continue;

    ar.clear();
    br.clear();
    bool empty = false, owned_elsewhere = false;
    for (int l = 0; l < m && !empty && !owned_elsewhere; ++l) {
      if (l == i) continue;
      const Scalar* al = a.data() + static_cast<std::size_t>(l) * d;
      const Scalar f = al[j] / ai[j];
      Scalar size = 0, scale = magnitude(al[j]);
      const std::size_t start = ar.size();
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        ar.push_back(al[c] - f * ai[c]);
        size = std::max(size, magnitude(ar.back()));
        scale = std::max(scale, magnitude(al[c]));
      }
      const Scalar rhs = b[l] - f * b[i];
      if (!par.zero(size, scale)) {
        br.push_back(rhs);
        continue;
      }
      // Parallel to H_i: redundant there, empty, or the same hyperplane (the
      // facet then belongs to the lower index).
      ar.resize(start);
      const Scalar rhs_scale = magnitude(b[l]) + magnitude(Scalar(f * b[i]));
      if (par.negative(rhs, rhs_scale))
        empty = true;
      else if (par.nonpositive(rhs, rhs_scale) && l < i && f > 0)
        owned_elsewhere = true;
    }
    if (empty || owned_elsewhere) continue;
    const std::optional<Scalar> face = recursive_volume(d - 1, ar, br, par);
    if (!face) return std::nullopt;
    // Rounding can leave an empty face slightly negative.
    if (*face > 0) total += b[i] * *face / magnitude(ai[j]);
  }
  return total / d;
}

}  // namespace cubesec::detail
