#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cubesec/bounds.hpp"
#include "cubesec/exact.hpp"
#include "cubesec/polytope.hpp"
#include "cubesec/random.hpp"
#include "oracles.hpp"

using namespace cubesec;
using doctest::Approx;

namespace {

struct QPoint {
  Rational x, y;
};

// Exact polygon clip by <p, w> <= 1; rational twin of oracle::clip.
std::vector<QPoint> clip_exact(const std::vector<QPoint>& poly, const Rational& wx, const Rational& wy) {
  std::vector<QPoint> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const QPoint& p = poly[i];
    const QPoint& q = poly[(i + 1) % poly.size()];
    const Rational fp = wx * p.x + wy * p.y - 1, fq = wx * q.x + wy * q.y - 1;
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

Rational exact_polygon_area(const Eigen::MatrixXd& w) {
  const Rational b = 1000;
  std::vector<QPoint> poly = {{-b, -b}, {b, -b}, {b, b}, {-b, b}};
  for (Eigen::Index c = 0; c < w.cols(); ++c) poly = clip_exact(poly, Rational(w(0, c)), Rational(w(1, c)));
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const QPoint& p = poly[i];
    const QPoint& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return abs(s) / 2;
}

Eigen::MatrixXd dyadic_matrix(int rows, int cols, Rng& rng) {
  // Entries k / 64 keep the matrix exact in double and rich in degeneracies.
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = static_cast<double>(static_cast<int>(rng() % 129) - 64) / 64.0;
  return m;
}

}  // namespace

TEST_CASE("rationalize recovers small fractions") {
  CHECK(*rationalize(0.5) == Rational(1, 2));
  CHECK(*rationalize(1.0 / 3.0) == Rational(1, 3));
  CHECK(*rationalize(-2.0 / 7.0) == Rational(-2, 7));
  CHECK(*rationalize(0.0) == Rational(0));
  CHECK_FALSE(rationalize(std::sqrt(2.0), 1000).has_value());
  CHECK_THROWS_AS(rationalize_gram(Eigen::Matrix2d::Constant(M_PI)), DomainError);
}

TEST_CASE("extremal gram matches the floating frame") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n && k <= 4; ++k) {
      const Partition part = balanced_partition(n, k);
      const RationalGram exact = extremal_gram(n, part);
      const RationalGram approx = rationalize_gram(gram(extremal_frame(n, k)));
      CHECK(exact.entries == approx.entries);
      CHECK(exact_rank(exact) == k);
    }
}

TEST_CASE("extremal squared volumes are exact") {
  CHECK(extremal_volume_squared(balanced_partition(5, 2)) == 96);
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k < n && k <= 4; ++k) {
      const Partition part = balanced_partition(n, k);
      CHECK(exact_section_volume_squared(extremal_gram(n, part)) == extremal_volume_squared(part));
    }
  // Signs change the frame but not the section.
  const Partition part = balanced_partition(5, 2);
  CHECK(exact_section_volume_squared(extremal_gram(5, part, std::vector<int>{1, -1, 1, -1, -1})) == 96);
  // Unbalanced partition {0} | {1,2,3,4}.
  const Partition lopsided = {{0}, {1, 2, 3, 4}};
  CHECK(exact_section_volume_squared(extremal_gram(5, lopsided)) == 64);
}

TEST_CASE("gram route against float volumes") {
  Rng rng = make_rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + trial % 2;
    const int n = k + 1 + trial % 3;
    // Integer frames have integer Gram matrices.
    Eigen::MatrixXd m(k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(static_cast<int>(rng() % 7) - 3);
    if (Eigen::FullPivLU<Eigen::MatrixXd>(m).rank() < k) continue;
    const Frame s(m);
    const double vol = section_volume(s);
    const Rational sq = exact_section_volume_squared(rationalize_gram(m.transpose() * m));
    CHECK(static_cast<double>(sq) == Approx(vol * vol).epsilon(1e-10));
    const Rational direct = exact_section_volume(s);
    CHECK(direct * direct == sq);
  }
}

TEST_CASE("exact half-space volume against exact clipping") {
  Eigen::MatrixXd sq(2, 4);
  sq << 1, -1, 0, 0, 0, 0, 1, -1;
  CHECK(exact_halfspace_volume(sq) == 4);
  CHECK(exact_section_volume(Frame(Eigen::MatrixXd::Identity(3, 3))) == 8);

  Rng rng = make_rng(22);
  int checked = 0;
  while (checked < 200) {
    const Eigen::MatrixXd w = dyadic_matrix(2, 3 + static_cast<int>(rng() % 4), rng);
    Eigen::MatrixXd both(2, 2 * w.cols());
    both << w, -w;
    if (Eigen::FullPivLU<Eigen::MatrixXd>(w).rank() < 2) continue;
    CHECK(exact_halfspace_volume(both) == exact_polygon_area(both));
    ++checked;
  }
}

TEST_CASE("exact volume of nearly parallel constraints") {
  // Two slabs a hair apart in angle: the float route may wobble, the exact
  // route must agree with exact clipping.
  Eigen::MatrixXd w(2, 3);
  w << 1, 1, 0, 0, 1e-9, 1;
  Eigen::MatrixXd both(2, 6);
  both << w, -w;
  CHECK(exact_halfspace_volume(both) == exact_polygon_area(both));
  CHECK(static_cast<double>(exact_section_volume(Frame(w))) == Approx(section_volume(Frame(w))).epsilon(1e-7));
}

TEST_CASE("three dimensional exact volume matches float") {
  Rng rng = make_rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const TightFrame s = random_tight_frame(5, 3, rng);
    CHECK(static_cast<double>(exact_section_volume(s)) == Approx(section_volume(s)).epsilon(1e-9));
  }
}

TEST_CASE("exact rank") {
  RationalGram g{3, std::vector<Rational>(9, Rational(0))};
  CHECK(exact_rank(g) == 0);
  g(0, 0) = g(1, 1) = 1;
  g(0, 1) = g(1, 0) = 1;
  CHECK(exact_rank(g) == 1);
  g(2, 2) = Rational(1, 3);
  CHECK(exact_rank(g) == 2);
}
