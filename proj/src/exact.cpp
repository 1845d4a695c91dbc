#include "cubesec/exact.hpp"

#include <cmath>

#include "cubesec/detail/combinations.hpp"
#include "cubesec/detail/lattice.hpp"
#include "cubesec/detail/recursive_volume.hpp"

namespace cubesec {

namespace {

using Policy = detail::ExactPolicy<Rational>;

Rational principal_det(const RationalGram& g, const std::vector<int>& idx) {
  const int m = static_cast<int>(idx.size());
  std::vector<Rational> a(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a[r * m + c] = g(idx[r], idx[c]);
  return detail::determinant(a, m);
}

// Greedy basis: add index i whenever the enlarged principal minor is nonzero.
std::vector<int> greedy_basis(const RationalGram& g) {
  std::vector<int> basis;
  for (int i = 0; i < g.n; ++i) {
    basis.push_back(i);
    if (principal_det(g, basis) == 0) basis.pop_back();
  }
  return basis;
}

}  // namespace

std::optional<Rational> rationalize(double x, long long max_denominator, double tolerance) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (std::abs(a) > 9e15) break;
    const long long ai = static_cast<long long>(a);
    const long long k2 = ai * k1 + k0;
    if (k2 > max_denominator) break;
    const long long h2 = ai * h1 + h0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tolerance * 1e-3) break;
    const double frac = rest - a;
    if (frac == 0.0) break;
    rest = 1.0 / frac;
  }
  if (k1 == 0) return std::nullopt;
  if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) > tolerance)
    return std::nullopt;
  return Rational(h1, k1);
}

RationalGram rationalize_gram(const Eigen::MatrixXd& gram, long long max_denominator,
                              double tolerance) {
  if (gram.rows() != gram.cols()) throw DomainError("Gram matrix must be square");
  RationalGram out;
  out.n = static_cast<int>(gram.rows());
  out.entries.resize(static_cast<std::size_t>(out.n) * out.n);
  for (int i = 0; i < out.n; ++i)
    for (int j = i; j < out.n; ++j) {
      const auto q = rationalize(0.5 * (gram(i, j) + gram(j, i)), max_denominator, tolerance);
      if (!q) throw DomainError("Gram entry has no rational approximation");
      out(i, j) = *q;
      out(j, i) = *q;
    }
  return out;
}

RationalGram extremal_gram(int n, const Partition& partition,
                           const std::optional<std::vector<int>>& signs) {
  // Reuse the float constructor for validation only.
  (void)extremal_frame(n, static_cast<int>(partition.size()), partition, signs);
  RationalGram g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n) * n, Rational(0));
  for (const auto& part : partition) {
    const Rational d(static_cast<long long>(part.size()));
    for (int a : part)
      for (int b : part) {
        const int sa = signs ? (*signs)[a] : 1;
        const int sb = signs ? (*signs)[b] : 1;
        g(a, b) = Rational(sa * sb) / d;
      }
  }
  return g;
}

Rational extremal_volume_squared(const Partition& partition) {
  Rational out(1);
  for (const auto& part : partition) out *= 4 * static_cast<long long>(part.size());
  return out;
}

int exact_rank(const RationalGram& g) { return static_cast<int>(greedy_basis(g).size()); }

Rational exact_section_volume_squared(const RationalGram& g) {
  const std::vector<int> basis = greedy_basis(g);
  const int k = static_cast<int>(basis.size());
  if (k == 0) throw NotAFrame();

  // alpha_j = G_BB^{-1} G_Bj, so <x, v_j> = <alpha_j, y>.
  std::vector<Rational> gbb(static_cast<std::size_t>(k) * k), inv;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) gbb[r * k + c] = g(basis[r], basis[c]);
  std::vector<Rational> work = gbb;
  const Rational det_gbb = detail::determinant(work, k);
  work = gbb;
  if (!detail::invert(work, inv, k, Policy{})) throw NotAFrame();

  detail::SlabSystem<Rational> sys;
  sys.dim = k;
  for (int j = 0; j < g.n; ++j) {
    if (g(j, j) == 0) continue;
    for (int r = 0; r < k; ++r) {
      Rational acc = 0;
      for (int c = 0; c < k; ++c) acc += inv[r * k + c] * g(basis[c], j);
      sys.rows.push_back(acc);
    }
    sys.two_sided.push_back(1);
  }

  const Policy pol;
  std::vector<Rational> candidates, scratch, sinv;
  detail::for_each_combination(sys.size(), k, [&](const std::vector<int>& subset) {
    detail::subset_vertices(sys, subset.data(), pol, candidates, scratch, sinv);
  });
  const std::vector<Rational> verts = detail::dedupe_points(candidates, k, pol);
  const auto constraints = detail::signed_constraints(sys);
  const auto sets = detail::active_sets(sys, constraints, verts, pol);
  const detail::FaceLattice<Rational, Policy> lattice(k, verts, sets, pol);

  std::vector<int> all(verts.size() / k);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  Rational vol_y = 0;
  for (const auto& simplex : lattice.triangulate(all, k)) {
    const Rational det = lattice.simplex_det(simplex);
    vol_y += det < 0 ? Rational(-det) : det;
  }
  Rational factorial = 1;
  for (int j = 2; j <= k; ++j) factorial *= j;
  vol_y /= factorial;
  return vol_y * vol_y / det_gbb;
}

Rational exact_halfspace_volume(const Eigen::MatrixXd& normals) {
  const int d = static_cast<int>(normals.rows());
  if (d < 1) throw DomainError("polytope dimension must be at least 1");
  std::vector<Rational> a, b;
  for (Eigen::Index c = 0; c < normals.cols(); ++c) {
    if (normals.col(c).squaredNorm() == 0.0) continue;
    for (int j = 0; j < d; ++j) a.emplace_back(normals(j, c));
    b.emplace_back(1);
  }
  const std::optional<Rational> vol =
      detail::recursive_volume(d, a, b, detail::ExactParallel<Rational>{});
  if (!vol) throw NotAFrame("constraints do not bound a polytope");
  return *vol;
}

Rational exact_section_volume(const Frame& s) {
  Eigen::MatrixXd w(s.k(), 2 * s.n());
  w << s.matrix(), -s.matrix();
  return exact_halfspace_volume(w);
}

}  // namespace cubesec
