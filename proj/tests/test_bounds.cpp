#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cubesec/bounds.hpp"
#include "cubesec/conditions.hpp"
#include "cubesec/random.hpp"
#include "oracles.hpp"

using namespace cubesec;
using doctest::Approx;

namespace {

// Centrally symmetric cyclic polygon with circumradius r and the given half
// angles, starting at angle theta; also returns its vertices for the oracle.
Eigen::MatrixXd cyclic_normals(const std::vector<double>& phi, double r, double theta,
                               std::vector<oracle::Point>& vertices) {
  const int f = static_cast<int>(phi.size());
  Eigen::MatrixXd w(2, 2 * f);
  vertices.clear();
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < f; ++i) {
      vertices.push_back(r * oracle::Point(std::cos(theta), std::sin(theta)));
      const double mid = theta + phi[i];
      w.col(side * f + i) = oracle::Point(std::cos(mid), std::sin(mid)) / (r * std::cos(phi[i]));
      theta += 2 * phi[i];
    }
  return w;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(c_cube(5, 2) == Approx(std::sqrt(6.0)));
  CHECK(c_cube(7, 2) == Approx(2 * std::sqrt(3.0)));
  CHECK(c_cube(6, 3) == Approx(2 * std::sqrt(2.0)));
  CHECK(c_cube_squared(7, 3) == Approx(12.0));
  CHECK(vaaler_lower(3) == 8.0);
  CHECK(ball_upper(4, 2) == Approx(8.0));
  CHECK(ball_upper(4, 2) == Approx(4 * c_cube(4, 2)));
  CHECK(ball_upper(3, 2) == Approx(4 * std::sqrt(2.0)));
  // Area bound 2(n - 1) once the dimension factor binds.
  for (int n = 5; n <= 20; ++n) CHECK(ball_upper(n - 1, 2) == Approx(2.0 * (n - 1)));
  CHECK(ball_upper(3, 2) < 2.0 * 3);
  CHECK_THROWS_AS(c_cube(2, 3), DomainError);
}

TEST_CASE("bound ordering on the whole grid") {
  for (int n = 2; n <= 20; ++n)
    for (int k = 1; k < n; ++k) {
      INFO("n = " << n << ", k = " << k);
      const BoundsReport r = bounds_report(n, k);
      CHECK(r.vaaler <= r.conjectured_max * (1 + 1e-12));
      CHECK(r.conjectured_max <= r.ball_upper * (1 + 1e-12));
      // Ball's first factor is attained exactly when k divides n.
      if (n % k == 0) CHECK(r.conjectured_max == Approx(std::pow(double(n) / k, k / 2.0) * r.vaaler));
    }
}

TEST_CASE("extremal frames") {
  const Partition five = balanced_partition(5, 2);
  REQUIRE(five.size() == 2);
  CHECK(five[0] == std::vector<int>{0, 1, 2});
  CHECK(five[1] == std::vector<int>{3, 4});
  CHECK(section_volume(extremal_frame(5, 2)) == Approx(4 * std::sqrt(6.0)));
  CHECK(section_volume(extremal_frame(4, 2)) == Approx(8.0));
  const Partition lopsided = {{0}, {1, 2, 3, 4}};
  CHECK(section_volume(extremal_frame(5, 2, lopsided)) == Approx(8.0));
  CHECK(extremal_volume(lopsided) == Approx(8.0));

  CHECK_THROWS_AS(extremal_frame(5, 2, Partition{{0, 1}, {1, 2, 3, 4}}), DomainError);
  CHECK_THROWS_AS(extremal_frame(5, 2, Partition{{0, 1, 2}, {}}), DomainError);
  CHECK_THROWS_AS(extremal_frame(5, 2, Partition{{0, 1}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(extremal_frame(5, 2, std::nullopt, std::vector<int>{1, 1, 0, 1, 1}), DomainError);

  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n && k <= 4; ++k) {
      if (k == 4 && n > 9) continue;
      const TightFrame s = extremal_frame(n, k);
      CHECK(tightness_defect(s) <= kTightTolerance);
      CHECK(section_volume(s) == Approx(vaaler_lower(k) * c_cube(n, k)).epsilon(1e-10));
      const BoundsReport r = bounds_report(s);
      REQUIRE(r.achieved.has_value());
      CHECK(*r.achieved == Approx(r.conjectured_max).epsilon(1e-10));
    }
}

TEST_CASE("planar angle extraction") {
  const PlanarAngles rect = planar_angles(build_section(extremal_frame(5, 2)));
  REQUIRE(rect.f == 2);
  CHECK(rect.radius == Approx(std::sqrt(5.0)));
  const double a = std::atan(std::sqrt(2.0 / 3.0)), b = std::atan(std::sqrt(1.5));
  CHECK(std::min(rect.phi[0], rect.phi[1]) == Approx(a));
  CHECK(std::max(rect.phi[0], rect.phi[1]) == Approx(b));
  CHECK(planar_area(rect) == Approx(4 * std::sqrt(6.0)));

  Eigen::MatrixXd hex(2, 3);
  for (int j = 0; j < 3; ++j) hex.col(j) = Eigen::Vector2d(std::cos(j * M_PI / 3), std::sin(j * M_PI / 3));
  const PlanarAngles h = planar_angles(build_section(Frame(hex)));
  REQUIRE(h.f == 3);
  for (double p : h.phi) CHECK(p == Approx(M_PI / 6));
  CHECK(planar_area(h) == Approx(h.radius * h.radius * 3 * std::sqrt(3.0) / 2));

  const PlanarAngles sq = planar_angles(build_section(Frame(Eigen::MatrixXd::Identity(2, 2))));
  CHECK(sq.f == 2);
  CHECK(planar_area(sq) == Approx(2 * sq.radius * sq.radius));

  Eigen::MatrixXd shear(2, 2);
  shear << 1, 1, 0, 1;
  CHECK_THROWS_AS(planar_angles(build_section(Frame(shear))), DomainError);
  CHECK_THROWS_AS(planar_angles(build_section(extremal_frame(4, 3))), DomainError);
}

TEST_CASE("planar area equals volume on random cyclic polygons") {
  Rng rng = make_rng(41);
  std::uniform_real_distribution<double> u(0.2, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int f = 2 + trial % 5;
    std::vector<double> phi(f);
    for (double& p : phi) p = u(rng);
    const double sum = std::accumulate(phi.begin(), phi.end(), 0.0);
    for (double& p : phi) p *= M_PI / 2 / sum;
    const double r = 0.5 + 2 * u(rng);
    std::vector<oracle::Point> vertices;
    const SectionPolytope p = build_polytope(cyclic_normals(phi, r, 3 * u(rng), vertices));
    const PlanarAngles a = planar_angles(p);
    REQUIRE(a.f == f);
    double total = 0.0;
    for (double x : a.phi) {
      CHECK(x > 0.0);
      CHECK(x < M_PI / 2);
      total += x;
    }
    CHECK(total == Approx(M_PI / 2));
    CHECK(a.radius == Approx(r));
    CHECK(planar_area(a) == Approx(volume(p)).epsilon(1e-8));
    CHECK(planar_area(a) == Approx(oracle::shoelace(vertices)).epsilon(1e-8));
    for (int i = 0; i < f; ++i) CHECK(isoperimetric_chain(a, i).holds());
  }
}

TEST_CASE("edge count profiles") {
  CHECK(tangent_profile(3) == Approx(std::sqrt(3.0)));
  CHECK(optimum_profile(7) == Approx(std::sqrt(3.0)));
  CHECK(tangent_profile(4) == Approx(4 * (std::sqrt(2.0) - 1)));
  CHECK(optimum_profile(5) == Approx(2 * std::sqrt(6.0) / 3));
  CHECK(tangent_profile(5) == Approx(std::sqrt(5 * (5 - 2 * std::sqrt(5.0)))));
  CHECK(tangent_profile(4) > optimum_profile(5));
  CHECK(tangent_profile(5) < optimum_profile(5));
  CHECK(max_facet_pairs(5) == 4);
  CHECK(max_facet_pairs(7) == 3);
  for (int n = 8; n <= 40; ++n) CHECK(max_facet_pairs(n) == 2);
  for (int f = 2; f < 64; ++f) CHECK(tangent_profile(f + 1) < tangent_profile(f));
  for (int n = 2; n < 64; ++n) CHECK(optimum_profile(n + 1) >= optimum_profile(n));
}

TEST_CASE("isoperimetric chain") {
  PlanarAngles regular{4, std::vector<double>(4, M_PI / 8), 1.0};
  const IsoperimetricChain eq = isoperimetric_chain(regular, 0);
  CHECK(eq.regular == Approx(eq.pinned));
  CHECK(eq.pinned == Approx(eq.actual));

  PlanarAngles rect{2, {0.5, M_PI / 2 - 0.5}, 1.0};
  const IsoperimetricChain strict = isoperimetric_chain(rect, 0);
  CHECK(strict.regular > strict.actual + 1e-6);
  CHECK(strict.holds());
  CHECK_THROWS_AS(isoperimetric_chain(PlanarAngles{1, {M_PI / 2}, 1.0}, 0), DomainError);
}

TEST_CASE("balance profile") {
  CHECK(balance_profile(M_PI / 6) == Approx(3 * std::sqrt(3.0) / 8));
  CHECK(balance_profile(M_PI / 4) == Approx(0.5));
  CHECK(std::abs(balance_profile(M_PI / 2)) < 1e-15);
  double hi = 0.0, lo = 1.0;
  for (int i = 0; i <= 10000; ++i) {
    const double phi = M_PI / 10 + (M_PI / 4 - M_PI / 10) * i / 10000;
    hi = std::max(hi, balance_profile(phi));
    lo = std::min(lo, balance_profile(phi));
  }
  CHECK(hi == Approx(3 * std::sqrt(3.0) / 8).epsilon(1e-8));
  CHECK(lo == Approx(0.5));
  CHECK(hi / lo < 2.0);
}

TEST_CASE("circumradius bound on planar optima") {
  for (int n = 3; n <= 12; ++n) {
    const PlanarAngles a = planar_angles(build_section(extremal_frame(n, 2)));
    CHECK(a.radius * a.radius <= circumradius_bound_squared(n, a.f) + 1e-12);
  }
  CHECK(circumradius_bound_squared(5, 2) == Approx(6.0));
}
