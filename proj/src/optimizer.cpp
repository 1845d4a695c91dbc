#include "cubesec/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "cubesec/bounds.hpp"
#include "cubesec/random.hpp"

namespace cubesec {

namespace {

enum class Move { All, One, Scale, Zero, Merge };

Move pick_move(Rng& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (u < 0.5) return Move::All;
  if (u < 0.7) return Move::One;
  if (u < 0.8) return Move::Scale;
  if (u < 0.85) return Move::Zero;
  return Move::Merge;
}

Eigen::MatrixXd propose(const Eigen::MatrixXd& m, double step, Rng& rng) {
  const int k = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> index(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd out = m;
  switch (pick_move(rng)) {
    case Move::All:
      out += (step / std::sqrt(static_cast<double>(n))) * gaussian_matrix(k, n, rng);
      break;
    case Move::One:
      out.col(index(rng)) += step * gaussian_matrix(k, 1, rng).col(0);
      break;
    case Move::Scale:
      out.col(index(rng)) *= std::exp(step * normal(rng));
      break;
    case Move::Zero:
      out.col(index(rng)).setZero();
      break;
    case Move::Merge: {
      const int i = index(rng);
      const int j = index(rng);
      if (i == j) break;
      const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
      // Full replacement half the time, otherwise a blend of size ~step.
      const double mix = unit(rng) < 0.5 ? 1.0 : std::min(1.0, step * unit(rng));
      out.col(i) = (1.0 - mix) * out.col(i) + mix * sign * out.col(j);
      break;
    }
  }
  return out;
}

std::optional<std::pair<TightFrame, double>> evaluate(const Eigen::MatrixXd& m) {
  try {
    TightFrame t = whiten(Frame(m)).tight;
    const double vol = section_volume(t);
    if (!std::isfinite(vol)) return std::nullopt;
    return std::make_pair(std::move(t), vol);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Lexicographic comparison of Gram matrices, for deterministic tie breaks.
bool gram_less(const Frame& a, const Frame& b) {
  const Eigen::MatrixXd ga = gram(a), gb = gram(b);
  for (Eigen::Index i = 0; i < ga.size(); ++i) {
    if (ga(i) != gb(i)) return ga(i) < gb(i);
  }
  return false;
}

// Float volumes of near-degenerate sections carry relative error up to about
// 1e-8; gains below this band are confirmed in exact arithmetic.
constexpr double kFloatNoise = 1e-7;

}  // namespace

void OptimizerConfig::validate() const {
  if (k < 2 || n <= k) throw DomainError("optimizer needs n > k >= 2");
  if (restarts < 0 || (restarts == 0 && !warm_start)) throw DomainError("no restarts requested");
  if (!(initial_step > 0.0) || !(min_step > 0.0) || !(improvement_tol > 0.0))
    throw DomainError("step sizes and tolerances must be positive");
  if (!(decay > 0.0 && decay < 1.0)) throw DomainError("decay must lie in (0, 1)");
  if (patience < 1 || max_iterations < 0) throw DomainError("invalid iteration budget");
}

RestartOutcome ascend_restart(const TightFrame& s0, const OptimizerConfig& config, int restart) {
  Rng rng = make_rng(config.seed, 1000003ULL + static_cast<std::uint64_t>(restart));
  TightFrame current = whiten(s0).tight;
  double vol = section_volume(current);
  RestartOutcome out{current, vol, 0, {{restart, 0, vol}}, Rational(0)};

  std::optional<Rational> current_exact;
  auto improves = [&](const TightFrame& t, double v, std::optional<Rational>& exact) {
    if (!(v > vol * (1.0 + config.improvement_tol))) return false;
    if (v > vol * (1.0 + kFloatNoise)) return true;
    if (!current_exact) current_exact = exact_section_volume(current);
    exact = exact_section_volume(t);
    return *exact > *current_exact * (1 + Rational(config.improvement_tol));
  };

  double step = config.initial_step;
  int misses = 0;
  int it = 0;
  while (it < config.max_iterations && step >= config.min_step) {
    ++it;
    const auto candidate = evaluate(propose(current.matrix(), step, rng));
    std::optional<Rational> candidate_exact;
    if (candidate && improves(candidate->first, candidate->second, candidate_exact)) {
      current = candidate->first;
      vol = candidate->second;
      current_exact = std::move(candidate_exact);
      misses = 0;
      out.trace.push_back({restart, it, vol});
    } else if (++misses >= config.patience) {
      step *= config.decay;
      misses = 0;
    }
  }
  out.frame = current;
  out.exact_volume = current_exact ? *current_exact : exact_section_volume(current);
  out.volume = static_cast<double>(out.exact_volume);
  out.iterations = it;
  return out;
}

namespace {

OptimizeResult finish(const OptimizerConfig& config, std::vector<RestartOutcome> outcomes) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    const RestartOutcome& a = outcomes[r];
    const RestartOutcome& b = outcomes[best];
    if (a.exact_volume > b.exact_volume ||
        (a.exact_volume == b.exact_volume && gram_less(a.frame, b.frame)))
      best = r;
  }
  TightFrame winner(outcomes[best].frame, 1e-9);
  const double vol = outcomes[best].volume;
  ConditionsReport report = verify_conditions(winner);
  const bool exceeds = vol > vaaler_lower(config.k) * c_cube(config.n, config.k) + 1e-4;
  return OptimizeResult{std::move(winner), vol,   static_cast<int>(best), std::move(outcomes),
                        std::move(report),  exceeds};
}

}  // namespace

OptimizeResult ascend(const TightFrame& s0, const OptimizerConfig& config) {
  if (s0.n() != config.n || s0.k() != config.k) throw DomainError("start frame has wrong shape");
  config.validate();
  std::vector<RestartOutcome> outcomes;
  outcomes.push_back(ascend_restart(s0, config, 0));
  return finish(config, std::move(outcomes));
}

OptimizeResult maximize(const OptimizerConfig& config) {
  config.validate();
  const int warm = config.warm_start ? 1 : 0;
  const int total = config.restarts + warm;
  std::vector<std::optional<RestartOutcome>> slots(total);

#pragma omp parallel for schedule(dynamic) if (config.parallel)
  for (int r = 0; r < total; ++r) {
    if (r < warm) {
      slots[r] = ascend_restart(extremal_frame(config.n, config.k), config, r);
    } else {
      Rng rng = make_rng(config.seed, static_cast<std::uint64_t>(r));
      slots[r] = ascend_restart(random_tight_frame(config.n, config.k, rng), config, r);
    }
  }
  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(total);
  for (auto& s : slots) outcomes.push_back(std::move(*s));
  return finish(config, std::move(outcomes));
}

double criterion_gap(const TightFrame& s, const Frame& s_tilde) {
  const double det = frame_operator(s_tilde).dense().determinant();
  const double ratio = section_volume(s_tilde) / section_volume(s);
  return 1.0 / std::sqrt(det) - ratio;
}

}  // namespace cubesec
