#include "cubesec/polytope.hpp"

#include <algorithm>
#include <cmath>

#include "cubesec/detail/lattice.hpp"
#include "cubesec/detail/recursive_volume.hpp"
#include "cubesec/kernels.hpp"

namespace cubesec {

namespace detail {

struct PolytopeAssembler {
  // row_label[r] is the public index of slab/half-space row r.
  static SectionPolytope assemble(const SlabSystem<double>& sys,
                                  const std::vector<int>& row_label,
                                  const GeometryOptions& opts,
                                  std::optional<Frame> generator = std::nullopt) {
    const int dim = sys.dim;
    const FloatPolicy pol{opts.eps_geom};
    const std::vector<double> candidates = opts.parallel
                                               ? kernels::vertex_candidates_parallel(sys, pol)
                                               : kernels::vertex_candidates_serial(sys, pol);
    const std::vector<double> verts = dedupe_points(candidates, dim, pol);
    const int nv = static_cast<int>(verts.size() / dim);
    if (nv < dim + 1) throw NotAFrame("constraints do not bound a full-dimensional polytope");

    const std::vector<SignedConstraint> constraints = signed_constraints(sys);
    const std::vector<std::vector<int>> active = active_sets(sys, constraints, verts, pol);
    const FaceLattice<double, FloatPolicy> lattice(dim, verts, active, pol);

    SectionPolytope out;
    out.dim_ = dim;
    out.options_ = opts;
    out.generator_ = std::move(generator);
    out.vertices_.reserve(nv);
    for (int v = 0; v < nv; ++v)
      out.vertices_.push_back(Eigen::Map<const Eigen::VectorXd>(lattice.point(v), dim));

    out.normals_.resize(dim, static_cast<Eigen::Index>(constraints.size()));
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const SignedConstraint& sc = constraints[c];
      out.normals_.col(static_cast<Eigen::Index>(c)) =
          sc.sign * Eigen::Map<const Eigen::VectorXd>(sys.row(sc.row), dim);
      out.labels_.push_back({row_label[sc.row], sc.sign});
    }

    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const std::vector<int>& ids = active[c];
      if (static_cast<int>(ids.size()) < dim) continue;
      auto same = std::find_if(out.facets_.begin(), out.facets_.end(),
                               [&](const FacetRecord& f) { return f.vertices == ids; });
      if (same != out.facets_.end()) {
        same->normal_indices.push_back(out.labels_[c]);
        continue;
      }
      if (lattice.affine_rank(ids) != dim - 1) continue;
      FacetRecord f;
      f.normal_indices.push_back(out.labels_[c]);
      f.vertices = ids;
      f.normal = out.normals_.col(static_cast<Eigen::Index>(c));
      f.simplices = lattice.triangulate(ids, dim - 1);
      out.facets_.push_back(std::move(f));
    }
    for (FacetRecord& f : out.facets_) fill_measure(out.vertices_, f);
    return out;
  }

  static double simplex_measure(const std::vector<Eigen::VectorXd>& verts,
                                const std::vector<int>& simplex) {
    const int d = static_cast<int>(simplex.size()) - 1;
    if (d == 0) return 1.0;
    const Eigen::Index k = verts[simplex[0]].size();
    Eigen::MatrixXd e(k, d);
    for (int j = 0; j < d; ++j) e.col(j) = verts[simplex[j + 1]] - verts[simplex[0]];
    double factorial = 1.0;
    for (int j = 2; j <= d; ++j) factorial *= j;
    const double g = (e.transpose() * e).determinant();
    return std::sqrt(std::max(g, 0.0)) / factorial;
  }

  static void fill_measure(const std::vector<Eigen::VectorXd>& verts, FacetRecord& f) {
    const Eigen::Index k = verts.front().size();
    f.measure = 0.0;
    f.centroid = Eigen::VectorXd::Zero(k);
    for (const auto& s : f.simplices) {
      const double m = simplex_measure(verts, s);
      Eigen::VectorXd bary = Eigen::VectorXd::Zero(k);
      for (int id : s) bary += verts[id];
      bary /= static_cast<double>(s.size());
      f.measure += m;
      f.centroid += m * bary;
    }
    if (f.measure > 0.0) f.centroid /= f.measure;
  }
};

}  // namespace detail

namespace {

detail::SlabSystem<double> halfspace_system(const Eigen::MatrixXd& normals) {
  detail::SlabSystem<double> sys;
  sys.dim = static_cast<int>(normals.rows());
  for (Eigen::Index c = 0; c < normals.cols(); ++c) {
    for (Eigen::Index j = 0; j < normals.rows(); ++j) sys.rows.push_back(normals(j, c));
    sys.two_sided.push_back(0);
  }
  return sys;
}

Eigen::MatrixXd replace_facet_normal(const SectionPolytope& p, const FacetRecord& f,
                                     const Eigen::VectorXd& replacement) {
  Eigen::MatrixXd w = p.normals();
  for (std::size_t c = 0; c < p.labels().size(); ++c) {
    const bool on_facet = std::find(f.normal_indices.begin(), f.normal_indices.end(),
                                    p.labels()[c]) != f.normal_indices.end();
    if (on_facet) w.col(static_cast<Eigen::Index>(c)) = replacement;
  }
  return w;
}

}  // namespace

const FacetRecord* SectionPolytope::facet_of(SignedIndex label) const {
  for (const FacetRecord& f : facets_)
    if (std::find(f.normal_indices.begin(), f.normal_indices.end(), label) !=
        f.normal_indices.end())
      return &f;
  return nullptr;
}

SectionPolytope build_polytope(const Eigen::MatrixXd& normals, const GeometryOptions& opts) {
  if (normals.rows() < 1) throw DomainError("polytope dimension must be at least 1");
  std::vector<int> labels(normals.cols());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  return detail::PolytopeAssembler::assemble(halfspace_system(normals), labels, opts);
}

SectionPolytope build_section(const Frame& s, const GeometryOptions& opts) {
  detail::SlabSystem<double> sys;
  sys.dim = s.k();
  std::vector<int> labels;
  for (int i = 0; i < s.n(); ++i) {
    const auto v = s.matrix().col(i);
    if (v.squaredNorm() == 0.0) continue;
    for (int j = 0; j < s.k(); ++j) sys.rows.push_back(v(j));
    sys.two_sided.push_back(1);
    labels.push_back(i);
  }
  return detail::PolytopeAssembler::assemble(sys, labels, opts, s);
}

std::vector<double> pyramid_volumes(const SectionPolytope& p) {
  std::vector<double> out;
  out.reserve(p.facets().size());
  for (const FacetRecord& f : p.facets()) out.push_back(f.measure / (p.dim() * f.normal.norm()));
  return out;
}

double halfspace_volume(const Eigen::MatrixXd& normals) {
  const int d = static_cast<int>(normals.rows());
  if (d < 1) throw DomainError("polytope dimension must be at least 1");
  std::vector<double> a, b;
  for (Eigen::Index c = 0; c < normals.cols(); ++c) {
    if (normals.col(c).squaredNorm() == 0.0) continue;
    for (int j = 0; j < d; ++j) a.push_back(normals(j, c));
    b.push_back(1.0);
  }
  const std::optional<double> vol = detail::recursive_volume(d, a, b, detail::FloatParallel{});
  if (!vol || !std::isfinite(*vol)) throw NotAFrame("constraints do not bound a polytope");
  return std::max(*vol, 0.0);
}

double section_volume(const Frame& s) {
  Eigen::MatrixXd w(s.k(), 2 * s.n());
  w << s.matrix(), -s.matrix();
  return halfspace_volume(w);
}

double volume(const SectionPolytope& p) { return halfspace_volume(p.normals()); }

double pyramid_volume(const SectionPolytope& p) {
  double total = 0.0;
  for (double v : pyramid_volumes(p)) total += v;
  return total;
}

double triangulated_volume(const SectionPolytope& p) {
  const int dim = p.dim();
  const detail::FloatPolicy pol{p.options().eps_geom};
  std::vector<double> verts;
  for (const auto& v : p.vertices()) verts.insert(verts.end(), v.data(), v.data() + dim);
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(p.normals().cols()));
  for (Eigen::Index c = 0; c < p.normals().cols(); ++c)
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
      if (pol.equal(p.normals().col(c).dot(p.vertices()[v]), 1.0))
        sets[c].push_back(static_cast<int>(v));
  const detail::FaceLattice<double, detail::FloatPolicy> lattice(dim, verts, sets, pol);
  std::vector<int> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  double factorial = 1.0;
  for (int j = 2; j <= dim; ++j) factorial *= j;
  double total = 0.0;
  for (const auto& simplex : lattice.triangulate(all, dim))
    total += std::abs(lattice.simplex_det(simplex)) / factorial;
  return total;
}

Eigen::VectorXd facet_centroid(const SectionPolytope& p, const FacetRecord& f) {
  FacetRecord copy = f;
  detail::PolytopeAssembler::fill_measure(p.vertices(), copy);
  if (!(copy.measure > p.options().eps_geom)) throw DomainError("degenerate facet");
  return copy.centroid;
}

double shift_facet_predict(const SectionPolytope&, const FacetRecord& f, double h) {
  return h * f.measure;
}

double rotate_facet_predict(const SectionPolytope&, const FacetRecord& f,
                            const Eigen::VectorXd& u, double t) {
  const Eigen::VectorXd& w = f.normal;
  if (u.size() != w.size()) throw DomainError("direction has wrong dimension");
  if (std::abs(u.dot(w)) > 1e-12 * w.norm())
    throw DomainError("rotation direction is not orthogonal to the facet normal");
  if (std::abs(u.norm() - 1.0) > 1e-9) throw DomainError("rotation direction is not a unit vector");
  const Eigen::VectorXd foot = w / w.squaredNorm();
  // Points of F with <x, u> > 0 are cut off when t > 0.
  return -f.measure / w.norm() * (f.centroid - foot).dot(u) * t;
}

double shifted_volume(const SectionPolytope& p, const FacetRecord& f, double h) {
  // Moving the hyperplane <x, w> = 1 outward by distance h.
  const double norm = f.normal.norm();
  const Eigen::VectorXd moved = f.normal / (1.0 + h * norm);
  return volume(build_polytope(replace_facet_normal(p, f, moved), p.options()));
}

double rotated_volume(const SectionPolytope& p, const FacetRecord& f,
                      const Eigen::VectorXd& u, double t) {
  return volume(build_polytope(replace_facet_normal(p, f, f.normal + t * u), p.options()));
}

}  // namespace cubesec
