#pragma once

// First-order necessary conditions for a local maximizer of vol_k Q(S) over
// tight frames, evaluated as nonnegative residuals on a candidate frame.

#include "cubesec/frame.hpp"
#include "cubesec/polytope.hpp"

namespace cubesec {

struct ConditionTolerances {
  double centroid = 1e-6;  // absolute, in coordinates
  double balance = 1e-6;   // relative to vol Q(S)
  double cyclic = 1e-6;    // relative to the mean vertex radius
  double length = 1e-8;    // absolute, on |v|^2
};

struct ConditionCheck {
  bool applicable = true;
  double residual = 0.0;
  double tolerance = 0.0;

  bool pass() const { return !applicable || residual <= tolerance; }
};

struct ConditionsReport {
  // P is the slab intersection by construction; recorded, never tested.
  bool slab_form_by_construction = true;
  ConditionCheck facet_correspondence;
  ConditionCheck centroid;
  ConditionCheck facet_balance;
  ConditionCheck length_bounds;
  ConditionCheck cyclic;
  ConditionTolerances tolerances;

  bool all_pass() const {
    return facet_correspondence.pass() && centroid.pass() && facet_balance.pass() &&
           length_bounds.pass() && cyclic.pass();
  }
};

/// Number of indices i with v_i = 0 or with {<x, v_i> = 1} not cutting a facet.
double check_facet_correspondence(const Frame& s, const SectionPolytope& p);

/// max_i |centroid(F_{v_i}) - v_i / |v_i|^2|; infinite when some v_i has no facet.
double check_centroid(const Frame& s, const SectionPolytope& p);

/// max over facets of |2 vol_{k-1}F / |v| - d |v|^2 vol Q| / vol Q.
double check_facet_balance(const Frame& s, const SectionPolytope& p);

/// (max - min) / mean of the vertex radii. Planar sections only.
double check_cyclic(const SectionPolytope& p);

struct LengthInterval {
  double lower;
  double upper;
};

/// Admissible |v|^2 range for global maximizers: [2/(n+1), 2/(n-1)] for k = 2,
/// otherwise [k/(n+k), k/(n-k)]. Requires n > k.
LengthInterval length_interval(int n, int k);

/// Largest violation of length_interval over the vectors of s.
double check_length_bounds(const Frame& s);

ConditionsReport verify_conditions(const Frame& s, const SectionPolytope& p,
                                   const ConditionTolerances& tol = {});
ConditionsReport verify_conditions(const Frame& s, const ConditionTolerances& tol = {},
                                   const GeometryOptions& opts = {});

}  // namespace cubesec
