#pragma once

// Closed-form volume bounds for central sections of [-1,1]^n, the affine-cube
// extremal construction, and the planar (k = 2) angle machinery used to rule
// out polygons with more than two pairs of edges.

#include <optional>
#include <vector>

#include "cubesec/frame.hpp"
#include "cubesec/polytope.hpp"

namespace cubesec {

/// Lower bound 2^k, valid for every central k-section.
double vaaler_lower(int k);

/// min((n/k)^{k/2}, 2^{(n-k)/2}): the better of the two upper-bound factors.
double ball_ratio(int n, int k);
/// ball_ratio(n, k) * 2^k.
double ball_upper(int n, int k);

/// Square of the affine-cube constant: ceil(n/k)^r floor(n/k)^(k-r), r = n mod k.
double c_cube_squared(int n, int k);
/// Volume ratio of the best affine-cube section to [-1,1]^k.
double c_cube(int n, int k);

using Partition = std::vector<std::vector<int>>;

/// First n mod k parts get ceil(n/k) consecutive indices, the rest floor(n/k).
Partition balanced_partition(int n, int k);

/// Tight frame with d_j = |part j| copies of +-e_j / sqrt(d_j). Its section is
/// the box prod [-sqrt(d_j), sqrt(d_j)]. `signs` holds +1/-1 per index.
TightFrame extremal_frame(int n, int k, const std::optional<Partition>& partition = std::nullopt,
                          const std::optional<std::vector<int>>& signs = std::nullopt);

/// 2^k sqrt(d_1 ... d_k) for a partition.
double extremal_volume(const Partition& partition);

struct BoundsReport {
  int n = 0;
  int k = 0;
  double vaaler = 0.0;       // 2^k
  double ball_ratio = 0.0;
  double ball_upper = 0.0;   // ball_ratio * 2^k
  double c_cube = 0.0;
  double conjectured_max = 0.0;  // 2^k c_cube
  std::optional<double> achieved;
  /// (achieved - vaaler) / (ball_upper - vaaler); 0 at the lower bound.
  std::optional<double> position;
};

BoundsReport bounds_report(int n, int k);
BoundsReport bounds_report(const Frame& frame);

// --- planar sections ------------------------------------------------------

/// Cyclic centrally symmetric polygon described by its circumradius and the
/// half central angles of f consecutive edges (clockwise).
struct PlanarAngles {
  int f = 0;
  std::vector<double> phi;
  double radius = 0.0;
};

/// Throws DomainError unless the polygon is planar and cyclic within tol.
PlanarAngles planar_angles(const SectionPolytope& p, double tol_cyclic = 1e-6);

/// R^2 * sum sin(2 phi_i).
double planar_area(const PlanarAngles& a);

/// f tan(pi / 2f): the facet-count side of the edge-count inequality.
double tangent_profile(double f);
/// 4 / (n + 1) * sqrt(floor(n/2) ceil(n/2)), defined for real n >= 2.
double optimum_profile(double n);
/// Largest f in [2, 64] with tangent_profile(f) >= optimum_profile(n).
int max_facet_pairs(int n);

struct IsoperimetricChain {
  double regular;  // f sin(pi / f)
  double pinned;   // sin 2phi_i + (f-1) sin((pi - 2phi_i)/(f-1))
  double actual;   // sum sin 2phi_j = area / R^2
  bool holds(double tol = 1e-12) const { return regular >= pinned - tol && pinned >= actual - tol; }
};

/// Area chain for a cyclic polygon with the i-th angle pinned. Throws for f = 1.
IsoperimetricChain isoperimetric_chain(const PlanarAngles& a, int pinned_index);

/// cos^2(phi) sin(2 phi): facet balance ratio in angle form.
double balance_profile(double phi);

/// Circumradius bound R^2 <= (n + 1) / 2 / cos^2(pi / 2f) for planar maximizers.
double circumradius_bound_squared(int n, int f);

}  // namespace cubesec
