#include "cubesec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubesec {

namespace {

void require_dims(int n, int k) {
  if (k < 1 || n < k) throw DomainError("need n >= k >= 1");
}

}  // namespace

double vaaler_lower(int k) { return std::ldexp(1.0, k); }

double ball_ratio(int n, int k) {
  require_dims(n, k);
  const double left = std::pow(static_cast<double>(n) / k, k / 2.0);
  const double right = std::pow(2.0, (n - k) / 2.0);
  return std::min(left, right);
}

double ball_upper(int n, int k) { return ball_ratio(n, k) * vaaler_lower(k); }

double c_cube_squared(int n, int k) {
  require_dims(n, k);
  const int lo = n / k;
  const int r = n % k;
  const int hi = r == 0 ? lo : lo + 1;
  return std::pow(static_cast<double>(hi), r) * std::pow(static_cast<double>(lo), k - r);
}

double c_cube(int n, int k) { return std::sqrt(c_cube_squared(n, k)); }

Partition balanced_partition(int n, int k) {
  require_dims(n, k);
  Partition out(k);
  const int lo = n / k;
  const int r = n % k;
  int next = 0;
  for (int j = 0; j < k; ++j) {
    const int size = j < r ? lo + 1 : lo;
    for (int t = 0; t < size; ++t) out[j].push_back(next++);
  }
  return out;
}

TightFrame extremal_frame(int n, int k, const std::optional<Partition>& partition,
                          const std::optional<std::vector<int>>& signs) {
  require_dims(n, k);
  const Partition parts = partition ? *partition : balanced_partition(n, k);
  if (static_cast<int>(parts.size()) != k) throw DomainError("partition must have k parts");
  std::vector<int> owner(n, -1);
  for (int j = 0; j < k; ++j) {
    if (parts[j].empty()) throw DomainError("partition parts must be nonempty");
    for (int i : parts[j]) {
      if (i < 0 || i >= n || owner[i] != -1) throw DomainError("invalid partition of [n]");
      owner[i] = j;
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw DomainError("partition does not cover [n]");
  if (signs) {
    if (static_cast<int>(signs->size()) != n) throw DomainError("need one sign per index");
    for (int s : *signs)
      if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
  }

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, n);
  for (int i = 0; i < n; ++i) {
    const int j = owner[i];
    const double sign = signs ? (*signs)[i] : 1.0;
    m(j, i) = sign / std::sqrt(static_cast<double>(parts[j].size()));
  }
  return TightFrame(Frame(std::move(m)));
}

double extremal_volume(const Partition& partition) {
  double prod = 1.0;
  for (const auto& part : partition) prod *= static_cast<double>(part.size());
  return vaaler_lower(static_cast<int>(partition.size())) * std::sqrt(prod);
}

BoundsReport bounds_report(int n, int k) {
  BoundsReport r;
  r.n = n;
  r.k = k;
  r.vaaler = vaaler_lower(k);
  r.ball_ratio = ball_ratio(n, k);
  r.ball_upper = ball_upper(n, k);
  r.c_cube = c_cube(n, k);
  r.conjectured_max = r.vaaler * r.c_cube;
  return r;
}

BoundsReport bounds_report(const Frame& frame) {
  BoundsReport r = bounds_report(frame.n(), frame.k());
  r.achieved = section_volume(frame);
  const double span = r.ball_upper - r.vaaler;
  r.position = span > 0.0 ? (*r.achieved - r.vaaler) / span : 0.0;
  return r;
}

PlanarAngles planar_angles(const SectionPolytope& p, double tol_cyclic) {
  if (p.dim() != 2) throw DomainError("planar only");
  const auto& verts = p.vertices();
  std::vector<std::pair<double, Eigen::Vector2d>> polar;
  double rmin = INFINITY, rmax = 0.0, rsum = 0.0;
  for (const auto& v : verts) {
    const double r = v.norm();
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    rsum += r;
    double angle = std::atan2(v(1), v(0));
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    polar.emplace_back(angle, Eigen::Vector2d(v(0), v(1)));
  }
  const double mean = rsum / static_cast<double>(verts.size());
  if ((rmax - rmin) > tol_cyclic * mean) throw DomainError("section is not cyclic");

  // Clockwise = decreasing polar angle, starting from the smallest angle.
  std::sort(polar.begin(), polar.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Eigen::Vector2d> order;
  order.push_back(polar.front().second);
  for (std::size_t i = polar.size() - 1; i >= 1; --i) order.push_back(polar[i].second);

  PlanarAngles out;
  out.radius = mean;
  out.f = static_cast<int>(order.size()) / 2;
  for (int i = 0; i < out.f; ++i) {
    const Eigen::Vector2d& a = order[i];
    const Eigen::Vector2d& b = order[(i + 1) % order.size()];
    const double cross = a(0) * b(1) - a(1) * b(0);
    out.phi.push_back(0.5 * std::abs(std::atan2(cross, a.dot(b))));
  }
  return out;
}

double planar_area(const PlanarAngles& a) {
  double s = 0.0;
  for (double phi : a.phi) s += std::sin(2.0 * phi);
  return a.radius * a.radius * s;
}

double tangent_profile(double f) { return f * std::tan(std::numbers::pi / (2.0 * f)); }

double optimum_profile(double n) {
  return 4.0 / (n + 1.0) * std::sqrt(std::floor(n / 2.0) * std::ceil(n / 2.0));
}

int max_facet_pairs(int n) {
  const double target = optimum_profile(n);
  int best = 2;
  // The profile is decreasing in f, so stop at the first failure.
  for (int f = 2; f <= 64; ++f) {
    if (tangent_profile(f) < target - 1e-12) break;
    best = f;
  }
  return best;
}

IsoperimetricChain isoperimetric_chain(const PlanarAngles& a, int pinned_index) {
  if (a.f < 2) throw DomainError("need at least two pairs of edges");
  if (pinned_index < 0 || pinned_index >= a.f) throw DomainError("angle index out of range");
  const double f = a.f;
  const double pi = std::numbers::pi;
  const double phi = a.phi[pinned_index];
  IsoperimetricChain c{};
  c.regular = f * std::sin(pi / f);
  c.pinned = std::sin(2.0 * phi) + (f - 1.0) * std::sin((pi - 2.0 * phi) / (f - 1.0));
  c.actual = 0.0;
  for (double p : a.phi) c.actual += std::sin(2.0 * p);
  return c;
}

double balance_profile(double phi) {
  const double c = std::cos(phi);
  return c * c * std::sin(2.0 * phi);
}

double circumradius_bound_squared(int n, int f) {
  const double c = std::cos(std::numbers::pi / (2.0 * f));
  return (n + 1.0) / 2.0 / (c * c);
}

}  // namespace cubesec
