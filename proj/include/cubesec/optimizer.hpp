#pragma once

// Multi-start derivative-free ascent of vol_k Q(S) over tight frames. Each
// step perturbs the current frame, whitens it back to a tight frame and keeps
// it only if the section volume grows.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubesec/conditions.hpp"
#include "cubesec/exact.hpp"
#include "cubesec/frame.hpp"
#include "cubesec/polytope.hpp"

namespace cubesec {

struct OptimizerConfig {
  int n = 0;
  int k = 0;
  int restarts = 32;  // cold restarts, on top of the optional warm start
  double initial_step = 0.3;
  double decay = 0.7;
  double min_step = 1e-7;
  int patience = 30;  // consecutive rejections before the step decays
  int max_iterations = 2000;
  double improvement_tol = 1e-12;  // relative volume gain required to accept
  std::uint64_t seed = 0;
  bool warm_start = true;  // restart 0 starts at extremal_frame(n, k)
  bool parallel = true;    // run restarts on OpenMP threads

  /// Throws DomainError unless n > k >= 2 and all tolerances are positive.
  void validate() const;
};

struct TracePoint {
  int restart;
  int iteration;
  double volume;
};

struct RestartOutcome {
  Frame frame;
  double volume;  // exact volume of the final frame, rounded
  int iterations;
  std::vector<TracePoint> trace;  // start point plus every accepted step (float volumes)
  Rational exact_volume;
};

struct OptimizeResult {
  TightFrame best;
  double best_volume;
  int best_restart;
  std::vector<RestartOutcome> restarts;
  ConditionsReport conditions;
  /// best_volume > 2^k c_cube(n, k) + 1e-4: a counterexample candidate.
  bool exceeds_conjectured_max = false;
};

/// One ascent from s0; the restart id only labels the trace. Uses
/// config.seed and restart to seed its generator.
RestartOutcome ascend_restart(const TightFrame& s0, const OptimizerConfig& config, int restart);

/// Single-restart OptimizeResult starting from s0.
OptimizeResult ascend(const TightFrame& s0, const OptimizerConfig& config);

/// Warm start (if enabled) plus config.restarts cold starts from random tight
/// frames. Restarts are ranked by the exact volume of their final frames, so
/// float noise in nearly degenerate sections cannot pick the winner.
/// Deterministic for a given config regardless of thread count.
OptimizeResult maximize(const OptimizerConfig& config);

/// 1/sqrt(det A_{s_tilde}) - vol Q(s_tilde) / vol Q(s). Nonnegative for every
/// s_tilde when s is a global maximizer.
double criterion_gap(const TightFrame& s, const Frame& s_tilde);

}  // namespace cubesec
