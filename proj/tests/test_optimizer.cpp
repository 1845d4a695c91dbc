#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cubesec/bounds.hpp"
#include "cubesec/optimizer.hpp"
#include "cubesec/random.hpp"

using namespace cubesec;
using doctest::Approx;

namespace {

OptimizerConfig config(int n, int k, int restarts, std::uint64_t seed = 7) {
  OptimizerConfig c;
  c.n = n;
  c.k = k;
  c.restarts = restarts;
  c.seed = seed;
  return c;
}

TightFrame coordinate_frame(int n, int k) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, n);
  for (int i = 0; i < k; ++i) m(i, i) = 1.0;
  return TightFrame(Frame(m));
}

void check_traces(const OptimizeResult& r) {
  for (const RestartOutcome& o : r.restarts) {
    REQUIRE_FALSE(o.trace.empty());
    for (std::size_t i = 1; i < o.trace.size(); ++i) CHECK(o.trace[i].volume >= o.trace[i - 1].volume);
    CHECK(tightness_defect(o.frame) <= kTightTolerance);
    CHECK(o.volume == Approx(o.trace.back().volume).epsilon(1e-7));
  }
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(config(5, 2, 4).validate());
  CHECK_THROWS_AS(config(2, 2, 4).validate(), DomainError);
  CHECK_THROWS_AS(config(5, 1, 4).validate(), DomainError);
  auto c = config(5, 2, 4);
  c.decay = 1.5;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = config(5, 2, 4);
  c.min_step = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = config(5, 2, 0);
  c.warm_start = false;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("extremal frame is a fixed point of ascent") {
  for (int n : {4, 5, 6, 7}) {
    const OptimizeResult r = ascend(extremal_frame(n, 2), config(n, 2, 0));
    CHECK(r.best_volume == Approx(4 * c_cube(n, 2)).epsilon(1e-12));
    check_traces(r);
  }
}

TEST_CASE("ascent leaves the coordinate section") {
  const OptimizeResult r = ascend(coordinate_frame(5, 2), config(5, 2, 0));
  CHECK(section_volume(coordinate_frame(5, 2)) == Approx(4.0));
  CHECK(r.best_volume > 4.0 + 1e-3);
  check_traces(r);
}

TEST_CASE("cold restarts find the planar optimum") {
  auto c = config(3, 2, 8);
  c.warm_start = false;
  const OptimizeResult r = maximize(c);
  CHECK(r.best_volume == Approx(4 * std::sqrt(2.0)).epsilon(1e-6));
  check_traces(r);

  c = config(5, 2, 16);
  c.warm_start = false;
  CHECK(maximize(c).best_volume == Approx(4 * std::sqrt(6.0)).epsilon(1e-6));
}

TEST_CASE("planar maximizers are rectangles satisfying every condition") {
  for (int n = 3; n <= 8; ++n) {
    INFO("n = " << n);
    const OptimizeResult r = maximize(config(n, 2, 6));
    CHECK(r.best_volume == Approx(4 * c_cube(n, 2)).epsilon(1e-6));
    CHECK_FALSE(r.exceeds_conjectured_max);
    CHECK(planar_angles(build_section(r.best)).f == 2);
    ConditionTolerances loose{1e-5, 1e-5, 1e-5, 1e-5};
    CHECK(verify_conditions(r.best, loose).all_pass());
    CHECK(r.conditions.all_pass());
  }
  CHECK(maximize(config(4, 2, 4)).best_volume == Approx(8.0).epsilon(1e-9));
}

TEST_CASE("three dimensional cell reaches the warm start") {
  auto c = config(7, 3, 1);
  c.max_iterations = 200;
  const OptimizeResult r = maximize(c);
  CHECK(r.best_volume >= 8 * std::sqrt(12.0) * (1 - 1e-12));
  check_traces(r);
}

TEST_CASE("determinism and parallel reduction") {
  auto c = config(6, 2, 5, 123);
  const OptimizeResult a = maximize(c);
  const OptimizeResult b = maximize(c);
  c.parallel = false;
  const OptimizeResult s = maximize(c);
  for (const OptimizeResult* other : {&b, &s}) {
    CHECK(other->best_volume == a.best_volume);
    CHECK(other->best_restart == a.best_restart);
    CHECK(other->best.matrix() == a.best.matrix());
    REQUIRE(other->restarts.size() == a.restarts.size());
    for (std::size_t i = 0; i < a.restarts.size(); ++i) {
      CHECK(other->restarts[i].frame.matrix() == a.restarts[i].frame.matrix());
      CHECK(other->restarts[i].trace.size() == a.restarts[i].trace.size());
    }
  }
  const OptimizeResult d = maximize(config(6, 2, 5, 124));
  CHECK(d.restarts[1].frame.matrix() != a.restarts[1].frame.matrix());
}

TEST_CASE("determinant criterion probe") {
  const TightFrame ext = extremal_frame(5, 2);
  CHECK(std::abs(criterion_gap(ext, ext)) < 1e-12);
  Rng rng = make_rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame tilde(ext.matrix() + 0.3 * gaussian_matrix(2, 5, rng));
    CHECK(criterion_gap(ext, tilde) >= -1e-12);
  }
  const TightFrame coord = coordinate_frame(5, 2);
  CHECK(criterion_gap(coord, ext) < 0.0);
  CHECK(criterion_gap(coord, ext) == Approx(1 - std::sqrt(6.0)));
}
