#include "cubesec/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cubesec {

double check_facet_correspondence(const Frame& s, const SectionPolytope& p) {
  int bad = 0;
  for (int i = 0; i < s.n(); ++i) {
    if (s.matrix().col(i).squaredNorm() == 0.0 || p.facet_of({i, +1}) == nullptr) ++bad;
  }
  return bad;
}

double check_centroid(const Frame& s, const SectionPolytope& p) {
  double worst = 0.0;
  for (int i = 0; i < s.n(); ++i) {
    const Eigen::VectorXd v = s.vector(i);
    const FacetRecord* f = v.squaredNorm() == 0.0 ? nullptr : p.facet_of({i, +1});
    if (f == nullptr) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, (f->centroid - v / v.squaredNorm()).norm());
  }
  return worst;
}

double check_facet_balance(const Frame&, const SectionPolytope& p) {
  const double vol = volume(p);
  double worst = 0.0;
  for (const FacetRecord& f : p.facets()) {
    const double len = f.normal.norm();
    const double lhs = 2.0 * f.measure / len;
    const double rhs = f.multiplicity() * len * len * vol;
    worst = std::max(worst, std::abs(lhs - rhs) / vol);
  }
  return worst;
}

double check_cyclic(const SectionPolytope& p) {
  if (p.dim() != 2) throw DomainError("planar only");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  for (const auto& v : p.vertices()) {
    const double r = v.norm();
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    sum += r;
  }
  return (hi - lo) / (sum / static_cast<double>(p.vertices().size()));
}

LengthInterval length_interval(int n, int k) {
  if (n <= k) throw DomainError("length bounds need n > k");
  if (k == 2) return {2.0 / (n + 1.0), 2.0 / (n - 1.0)};
  return {static_cast<double>(k) / (n + k), static_cast<double>(k) / (n - k)};
}

double check_length_bounds(const Frame& s) {
  const LengthInterval range = length_interval(s.n(), s.k());
  double worst = 0.0;
  for (int i = 0; i < s.n(); ++i) {
    const double sq = s.matrix().col(i).squaredNorm();
    worst = std::max({worst, range.lower - sq, sq - range.upper});
  }
  return worst;
}

ConditionsReport verify_conditions(const Frame& s, const SectionPolytope& p,
                                   const ConditionTolerances& tol) {
  ConditionsReport r;
  r.tolerances = tol;
  r.facet_correspondence = {true, check_facet_correspondence(s, p), 0.0};
  r.centroid = {true, check_centroid(s, p), tol.centroid};
  r.facet_balance = {true, check_facet_balance(s, p), tol.balance};
  if (s.n() > s.k())
    r.length_bounds = {true, check_length_bounds(s), tol.length};
  else
    r.length_bounds = {false, 0.0, tol.length};
  if (s.k() == 2)
    r.cyclic = {true, check_cyclic(p), tol.cyclic};
  else
    r.cyclic = {false, 0.0, tol.cyclic};
  return r;
}

ConditionsReport verify_conditions(const Frame& s, const ConditionTolerances& tol,
                                   const GeometryOptions& opts) {
  return verify_conditions(s, build_section(s, opts), tol);
}

}  // namespace cubesec
