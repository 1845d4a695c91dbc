#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cubesec/bounds.hpp"
#include "cubesec/polytope.hpp"
#include "cubesec/random.hpp"
#include "oracles.hpp"

using namespace cubesec;
using doctest::Approx;

namespace {

Frame square() { return Frame(Eigen::MatrixXd::Identity(2, 2)); }

Frame hexagon() {
  Eigen::MatrixXd m(2, 3);
  for (int j = 0; j < 3; ++j)
    m.col(j) = std::sqrt(2.0 / 3.0) * Eigen::Vector2d(std::cos(j * M_PI / 3), std::sin(j * M_PI / 3));
  return Frame(m);
}

const FacetRecord& facet_along(const SectionPolytope& p, const Eigen::VectorXd& dir) {
  const FacetRecord* best = nullptr;
  for (const auto& f : p.facets())
    if (best == nullptr || f.normal.normalized().dot(dir) > best->normal.normalized().dot(dir)) best = &f;
  return *best;
}

bool has_vertex(const SectionPolytope& p, const Eigen::VectorXd& x, double tol = 1e-9) {
  return std::any_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Eigen::VectorXd& v) { return (v - x).norm() <= tol; });
}

}  // namespace

TEST_CASE("square section") {
  const SectionPolytope p = build_section(square());
  CHECK(p.vertices().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(has_vertex(p, Eigen::Vector2d(1, -1)));
  CHECK(volume(p) == Approx(4.0));
  const FacetRecord& right = facet_along(p, Eigen::Vector2d(1, 0));
  CHECK(right.measure == Approx(2.0));
  CHECK((facet_centroid(p, right) - Eigen::Vector2d(1, 0)).norm() < 1e-12);
  CHECK(shift_facet_predict(p, right, 0.1) == Approx(0.2));
  CHECK(shift_facet_predict(p, right, 0.0) == 0.0);
  CHECK(rotate_facet_predict(p, right, Eigen::Vector2d(0, 1), 0.3) == Approx(0.0));
  CHECK(rotate_facet_predict(p, right, Eigen::Vector2d(0, 1), 0.0) == 0.0);
  CHECK_THROWS_AS(rotate_facet_predict(p, right, Eigen::Vector2d(1, 1).normalized(), 0.1), DomainError);
  REQUIRE(p.generator().has_value());
  CHECK(*p.generator() == square());
}

TEST_CASE("regular hexagon section") {
  const SectionPolytope p = build_section(hexagon());
  CHECK(p.vertices().size() == 6);
  CHECK(p.facets().size() == 6);
  for (const auto& f : p.facets()) CHECK(1.0 / f.normal.norm() == Approx(std::sqrt(1.5)));
  CHECK(volume(p) == Approx(3.0 * std::sqrt(3.0)));
  CHECK(volume(p) == Approx(oracle::section_area(hexagon().matrix())));
}

TEST_CASE("extremal rectangle for n = 5") {
  const SectionPolytope p = build_section(extremal_frame(5, 2));
  CHECK(p.vertices().size() == 4);
  REQUIRE(p.facets().size() == 4);
  const double a = std::sqrt(3.0), b = std::sqrt(2.0);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) CHECK(has_vertex(p, Eigen::Vector2d(sx * a, sy * b)));
  CHECK(volume(p) == Approx(4.0 * std::sqrt(6.0)));
  const FacetRecord& side = facet_along(p, Eigen::Vector2d(1, 0));
  CHECK(side.multiplicity() == 3);
  CHECK((facet_centroid(p, side) - Eigen::Vector2d(a, 0)).norm() < 1e-12);
  CHECK(shift_facet_predict(p, side, 1e-3) == Approx(1e-3 * 2 * b));
}

TEST_CASE("simplex facet centroid is the barycenter") {
  // Octahedron |x| + |y| + |z| <= 1: every facet is a triangle.
  Eigen::MatrixXd w(3, 8);
  int c = 0;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) w.col(c++) = Eigen::Vector3d(sx, sy, sz);
  const SectionPolytope p = build_polytope(w);
  CHECK(p.vertices().size() == 6);
  REQUIRE(p.facets().size() == 8);
  CHECK(volume(p) == Approx(4.0 / 3.0));
  for (const auto& f : p.facets()) {
    REQUIRE(f.vertices.size() == 3);
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (int id : f.vertices) mean += p.vertices()[id];
    CHECK((facet_centroid(p, f) - mean / 3.0).norm() < 1e-12);
  }
}

TEST_CASE("rank deficient frames are rejected") {
  Eigen::MatrixXd w(2, 2);
  w << 1, -1, 0, 0;
  CHECK_THROWS_AS(build_polytope(w), NotAFrame);
  CHECK_THROWS_AS(halfspace_volume(w), NotAFrame);
}

TEST_CASE("section invariants over random frames") {
  Rng rng = make_rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 3;
    const int n = k + static_cast<int>(rng() % (k == 4 ? 3 : 5));
    const Frame s = trial % 2 ? Frame(random_frame(n, k, rng)) : Frame(random_tight_frame(n, k, rng));
    const SectionPolytope p = build_section(s);
    for (const auto& v : p.vertices()) CHECK(has_vertex(p, -v, 1e-8));
    for (const auto& f : p.facets()) {
      CHECK(f.measure > 0.0);
      for (int id : f.vertices) CHECK(std::abs(p.vertices()[id].dot(f.normal) - 1.0) <= kGeomTolerance);
      CHECK((facet_centroid(p, f) - f.centroid).norm() < 1e-9);
    }
    const double vol = volume(p);
    CHECK(vol == Approx(pyramid_volume(p)).epsilon(1e-9));
    CHECK(vol == Approx(triangulated_volume(p)).epsilon(1e-9));
    CHECK(vol == Approx(section_volume(s)).epsilon(1e-12));
    if (k == 2) CHECK(vol == Approx(oracle::section_area(s.matrix())).epsilon(1e-9));
    // Pyramid of each facet: (1/k) vol_{k-1}F / |w|.
    const auto pyramids = pyramid_volumes(p);
    for (std::size_t i = 0; i < pyramids.size(); ++i)
      CHECK(pyramids[i] == Approx(p.facets()[i].measure / p.facets()[i].normal.norm() / k));
  }
}

TEST_CASE("three dimensional volume against Monte Carlo") {
  Rng rng = make_rng(12);
  std::mt19937_64 mc(99);
  for (int trial = 0; trial < 3; ++trial) {
    const TightFrame s = random_tight_frame(5, 3, rng);
    double r = 0.0;
    const SectionPolytope p = build_section(s);
    for (const auto& v : p.vertices()) r = std::max(r, v.cwiseAbs().maxCoeff());
    const int samples = 400000;
    const double est = oracle::monte_carlo_section(s.matrix(), r, samples, mc);
    const double vol = section_volume(s);
    // Binomial standard error on the hit fraction, five sigma.
    const double box = std::pow(2 * r, 3);
    const double q = vol / box;
    CHECK(std::abs(est - vol) <= 5 * box * std::sqrt(q * (1 - q) / samples));
  }
}

TEST_CASE("parallel generators share one facet") {
  Eigen::MatrixXd m(2, 4);
  m << 0.5, -0.5, 0, 1, 0, 0, 1, 0;
  const SectionPolytope p = build_section(Frame(m));
  CHECK(p.facets().size() == 4);
  const FacetRecord& right = facet_along(p, Eigen::Vector2d(1, 0));
  CHECK(right.multiplicity() == 1);
  CHECK(right.normal.isApprox(Eigen::Vector2d(1, 0)));
  // Equal up to sign: both labels land on the same facet.
  Eigen::MatrixXd twin(2, 3);
  twin << 1, -1, 0, 0, 0, 1;
  const SectionPolytope q = build_section(Frame(twin));
  CHECK(facet_along(q, Eigen::Vector2d(1, 0)).multiplicity() == 2);
  CHECK(q.facet_of({0, +1}) == q.facet_of({1, -1}));
}

TEST_CASE("zero vectors add no constraint") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 3);
  m(0, 0) = m(1, 1) = 1.0;
  const SectionPolytope p = build_section(Frame(m));
  CHECK(p.facets().size() == 4);
  CHECK(p.facet_of({2, +1}) == nullptr);
  CHECK(volume(p) == Approx(4.0));
}

TEST_CASE("shift predictor is first order") {
  Rng rng = make_rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 2;
    const TightFrame s = random_tight_frame(k + 2, k, rng);
    const SectionPolytope p = build_section(s);
    const double vol = volume(p);
    for (const auto& f : p.facets()) {
      double prev = 0.0;
      for (int e = 2; e <= 4; ++e) {
        const double h = std::pow(10.0, -e);
        const double err = std::abs(shifted_volume(p, f, h) - vol - shift_facet_predict(p, f, h));
        // Remainder is o(h): ratio to h shrinks with h.
        if (e > 2) CHECK(err / h <= prev * 0.5 + 1e-9);
        prev = err / h;
      }
    }
  }
}

TEST_CASE("rotation predictor matches finite differences") {
  Rng rng = make_rng(14);
  int informative = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 2;
    const TightFrame s = random_tight_frame(k + 2, k, rng);
    const SectionPolytope p = build_section(s);
    const double vol = volume(p);
    for (const auto& f : p.facets()) {
      Eigen::VectorXd u = random_unit_vector(k, rng);
      u -= u.dot(f.normal) / f.normal.squaredNorm() * f.normal;
      u.normalize();
      const double slope = rotate_facet_predict(p, f, u, 1.0);
      if (std::abs(slope) < 1e-3) continue;
      ++informative;
      auto delta = [&](double t) { return rotated_volume(p, f, u, t) - vol; };
      const double fd = oracle::central_difference(delta, 1e-6);
      CHECK(fd == Approx(slope).epsilon(1e-4));
      // Forward remainder shrinks at least linearly.
      const double e1 = std::abs(delta(1e-3) - slope * 1e-3);
      const double e2 = std::abs(delta(1e-4) - slope * 1e-4);
      CHECK(e2 <= 0.2 * e1 + 1e-12);
    }
  }
  CHECK(informative > 20);
}

TEST_CASE("parallel enumeration agrees with serial") {
  Rng rng = make_rng(15);
  const TightFrame s = random_tight_frame(7, 3, rng);
  const SectionPolytope a = build_section(s);
  const SectionPolytope b = build_section(s, GeometryOptions{kGeomTolerance, true});
  REQUIRE(a.vertices().size() == b.vertices().size());
  for (std::size_t i = 0; i < a.vertices().size(); ++i) CHECK(a.vertices()[i] == b.vertices()[i]);
  CHECK(volume(a) == volume(b));
}
