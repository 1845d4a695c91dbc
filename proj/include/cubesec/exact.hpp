#pragma once

// Exact rational volumes of cube sections, computed from the Gram matrix of
// the frame. Entries of frames are often square roots of rationals while
// their Gram matrices are rational, so squared volumes can be compared
// exactly.

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "cubesec/bounds.hpp"

namespace cubesec {

using Rational = boost::multiprecision::cpp_rational;

/// Symmetric n x n rational matrix, row-major.
struct RationalGram {
  int n = 0;
  std::vector<Rational> entries;

  const Rational& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  Rational& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/// Best continued-fraction approximation p/q with q <= max_denominator, if it
/// is within `tolerance` of x.
std::optional<Rational> rationalize(double x, long long max_denominator = 1000000,
                                    double tolerance = 1e-12);

/// Throws DomainError if some entry has no close rational approximation.
RationalGram rationalize_gram(const Eigen::MatrixXd& gram, long long max_denominator = 1000000,
                              double tolerance = 1e-12);

/// Gram matrix of extremal_frame(partition, signs), built directly in
/// rationals: entry s_a s_b / d when a and b share a part of size d, else 0.
RationalGram extremal_gram(int n, const Partition& partition,
                           const std::optional<std::vector<int>>& signs = std::nullopt);

/// 4^k * prod d_j, the squared volume claimed for the extremal section.
Rational extremal_volume_squared(const Partition& partition);

/// vol_k Q(S)^2 for any frame S with Gram matrix g (k is the rank of g).
/// Works in the coordinates y_b = <x, v_b> for a basis b of the frame vectors.
Rational exact_section_volume_squared(const RationalGram& g);

/// Exact volume of P(W) (resp. Q(S)) for the double entries as given; every
/// double is a rational, so no rounding happens anywhere.
Rational exact_halfspace_volume(const Eigen::MatrixXd& normals);
Rational exact_section_volume(const Frame& s);

/// Rank of a rational symmetric matrix.
int exact_rank(const RationalGram& g);

}  // namespace cubesec
