#pragma once

// Scalar-generic machinery for polytopes given by slabs |<a_r, x>| <= 1 and
// half-spaces <a_r, x> <= 1 in R^dim: vertex candidates from dim-subsets of
// constraints, active sets, affine rank, face lattice and pulling
// triangulations. Instantiated with double (tolerance policy) and with an
// exact rational type (exact policy).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubesec::detail {

struct FloatPolicy {
  double geom = 1e-9;    // feasibility, active-set and vertex dedup tolerance
  double pivot = 1e-12;  // relative pivot floor in dim x dim solves
  double rank = 1e-10;   // relative pivot floor in affine-rank elimination

  bool within(double lhs, double bound) const { return lhs <= bound + geom; }
  bool equal(double a, double b) const { return std::abs(a - b) <= geom; }
  bool singular(double pivot_value, double scale) const {
    return std::abs(pivot_value) <= pivot * scale;
  }
  bool rank_zero(double pivot_value, double scale) const {
    return std::abs(pivot_value) <= rank * scale;
  }
  bool same_point(const double* a, const double* b, int dim) const {
    double diff = 0.0, size = 1.0;
    for (int i = 0; i < dim; ++i) {
      diff = std::max(diff, std::abs(a[i] - b[i]));
      size = std::max(size, std::abs(a[i]));
    }
    return diff <= geom * size;
  }
};

template <class Scalar>
struct ExactPolicy {
  bool within(const Scalar& lhs, const Scalar& bound) const { return lhs <= bound; }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  bool singular(const Scalar& pivot_value, const Scalar&) const { return pivot_value == 0; }
  bool rank_zero(const Scalar& pivot_value, const Scalar&) const { return pivot_value == 0; }
  bool same_point(const Scalar* a, const Scalar* b, int dim) const {
    for (int i = 0; i < dim; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
};

template <class Scalar>
Scalar magnitude(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <class Scalar>
struct SlabSystem {
  int dim = 0;
  std::vector<Scalar> rows;       // size() x dim, row-major
  std::vector<char> two_sided;    // slab |<a,x>| <= 1 or half-space <a,x> <= 1

  int size() const { return static_cast<int>(two_sided.size()); }
  const Scalar* row(int r) const { return rows.data() + static_cast<std::size_t>(r) * dim; }
};

/// One facet-candidate hyperplane <sign * a_row, x> = 1.
struct SignedConstraint {
  int row;
  int sign;
};

template <class Scalar>
std::vector<SignedConstraint> signed_constraints(const SlabSystem<Scalar>& sys) {
  std::vector<SignedConstraint> out;
  for (int r = 0; r < sys.size(); ++r) {
    out.push_back({r, +1});
    if (sys.two_sided[r]) out.push_back({r, -1});
  }
  return out;
}

/// In-place Gauss-Jordan inverse of a dim x dim row-major matrix with partial
/// pivoting. Returns false when a pivot is below the policy floor.
template <class Scalar, class Policy>
bool invert(std::vector<Scalar>& a, std::vector<Scalar>& inv, int dim, const Policy& pol) {
  Scalar scale = 0;
  for (const auto& x : a) scale = std::max(scale, magnitude(x));
  inv.assign(static_cast<std::size_t>(dim) * dim, Scalar(0));
  for (int i = 0; i < dim; ++i) inv[i * dim + i] = 1;
  for (int c = 0; c < dim; ++c) {
    int best = c;
    for (int r = c + 1; r < dim; ++r)
      if (magnitude(a[r * dim + c]) > magnitude(a[best * dim + c])) best = r;
    if (pol.singular(a[best * dim + c], scale)) return false;
    if (best != c)
      for (int j = 0; j < dim; ++j) {
        std::swap(a[c * dim + j], a[best * dim + j]);
        std::swap(inv[c * dim + j], inv[best * dim + j]);
      }
    const Scalar p = a[c * dim + c];
    for (int j = 0; j < dim; ++j) {
      a[c * dim + j] /= p;
      inv[c * dim + j] /= p;
    }
    for (int r = 0; r < dim; ++r) {
      if (r == c) continue;
      const Scalar f = a[r * dim + c];
      if (f == 0) continue;
      for (int j = 0; j < dim; ++j) {
        a[r * dim + j] -= f * a[c * dim + j];
        inv[r * dim + j] -= f * inv[c * dim + j];
      }
    }
  }
  return true;
}

/// Rank of a rows x cols row-major matrix (destroys the input).
template <class Scalar, class Policy>
int matrix_rank(std::vector<Scalar>& m, int rows, int cols, const Policy& pol) {
  Scalar scale = 0;
  for (const auto& x : m) scale = std::max(scale, magnitude(x));
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int best = rank;
    for (int r = rank + 1; r < rows; ++r)
      if (magnitude(m[r * cols + c]) > magnitude(m[best * cols + c])) best = r;
    if (pol.rank_zero(m[best * cols + c], scale)) continue;
    if (best != rank)
      for (int j = 0; j < cols; ++j) std::swap(m[rank * cols + j], m[best * cols + j]);
    for (int r = rank + 1; r < rows; ++r) {
      const Scalar f = m[r * cols + c] / m[rank * cols + c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) m[r * cols + j] -= f * m[rank * cols + j];
    }
    ++rank;
  }
  return rank;
}

/// Determinant of a dim x dim row-major matrix by elimination (destroys input).
template <class Scalar>
Scalar determinant(std::vector<Scalar>& m, int dim) {
  Scalar det = 1;
  for (int c = 0; c < dim; ++c) {
    int best = c;
    for (int r = c + 1; r < dim; ++r)
      if (magnitude(m[r * dim + c]) > magnitude(m[best * dim + c])) best = r;
    if (m[best * dim + c] == 0) return Scalar(0);
    if (best != c) {
      for (int j = 0; j < dim; ++j) std::swap(m[c * dim + j], m[best * dim + j]);
      det = -det;
    }
    det *= m[c * dim + c];
    for (int r = c + 1; r < dim; ++r) {
      const Scalar f = m[r * dim + c] / m[c * dim + c];
      if (f == 0) continue;
      for (int j = c; j < dim; ++j) m[r * dim + j] -= f * m[c * dim + j];
    }
  }
  return det;
}

/// Vertex candidates from one dim-subset of constraint rows: solves
/// <a_r, x> = +-1 for every admissible sign pattern and appends the feasible
/// solutions to `out`. Scratch buffers are reused across calls.
template <class Scalar, class Policy>
void subset_vertices(const SlabSystem<Scalar>& sys, const int* subset, const Policy& pol,
                     std::vector<Scalar>& out, std::vector<Scalar>& scratch,
                     std::vector<Scalar>& inv) {
  const int dim = sys.dim;
  scratch.resize(static_cast<std::size_t>(dim) * dim);
  unsigned fixed_mask = 0;  // bits that must stay at +1 (half-spaces)
  for (int i = 0; i < dim; ++i) {
    const Scalar* a = sys.row(subset[i]);
    for (int j = 0; j < dim; ++j) scratch[i * dim + j] = a[j];
    if (!sys.two_sided[subset[i]]) fixed_mask |= 1u << i;
  }
  if (!invert(scratch, inv, dim, pol)) return;

  std::vector<Scalar> x(dim);
  const unsigned patterns = 1u << dim;
  for (unsigned mask = 0; mask < patterns; ++mask) {
    if (mask & fixed_mask) continue;
    for (int i = 0; i < dim; ++i) {
      Scalar acc = 0;
      for (int j = 0; j < dim; ++j) {
        if (mask & (1u << j))
          acc -= inv[i * dim + j];
        else
          acc += inv[i * dim + j];
      }
      x[i] = acc;
    }
    bool feasible = true;
    for (int r = 0; r < sys.size() && feasible; ++r) {
      const Scalar* a = sys.row(r);
      Scalar v = 0;
      for (int j = 0; j < dim; ++j) v += a[j] * x[j];
      feasible = pol.within(v, Scalar(1)) && (!sys.two_sided[r] || pol.within(Scalar(-v), Scalar(1)));
    }
    if (feasible) out.insert(out.end(), x.begin(), x.end());
  }
}

/// Keeps the first occurrence of every point (order preserving).
template <class Scalar, class Policy>
std::vector<Scalar> dedupe_points(const std::vector<Scalar>& candidates, int dim,
                                  const Policy& pol) {
  std::vector<Scalar> out;
  const std::size_t count = dim == 0 ? 0 : candidates.size() / dim;
  for (std::size_t c = 0; c < count; ++c) {
    const Scalar* p = candidates.data() + c * dim;
    bool seen = false;
    for (std::size_t u = 0; u * dim < out.size() && !seen; ++u)
      seen = pol.same_point(out.data() + u * dim, p, dim);
    if (!seen) out.insert(out.end(), p, p + dim);
  }
  return out;
}

/// Sorted ids of the vertices lying on <sign * a_row, x> = 1, per constraint.
template <class Scalar, class Policy>
std::vector<std::vector<int>> active_sets(const SlabSystem<Scalar>& sys,
                                          const std::vector<SignedConstraint>& constraints,
                                          const std::vector<Scalar>& vertices,
                                          const Policy& pol) {
  const int dim = sys.dim;
  const int nv = static_cast<int>(vertices.size() / dim);
  std::vector<std::vector<int>> out(constraints.size());
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const Scalar* a = sys.row(constraints[c].row);
    for (int v = 0; v < nv; ++v) {
      Scalar val = 0;
      for (int j = 0; j < dim; ++j) val += a[j] * vertices[v * dim + j];
      if (constraints[c].sign < 0) val = -val;
      if (pol.equal(val, Scalar(1))) out[c].push_back(v);
    }
  }
  return out;
}

/// Face lattice of a full-dimensional polytope described by its vertices and
/// the vertex sets of its supporting constraints.
template <class Scalar, class Policy>
class FaceLattice {
 public:
  using Face = std::vector<int>;

  FaceLattice(int dim, const std::vector<Scalar>& vertices,
              const std::vector<std::vector<int>>& constraint_sets, Policy pol)
      : dim_(dim), vertices_(vertices), sets_(constraint_sets), pol_(pol) {}

  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(vertices_.size() / dim_); }
  const Scalar* point(int v) const { return vertices_.data() + static_cast<std::size_t>(v) * dim_; }

  /// Dimension of the affine hull of the given vertices (-1 if empty).
  int affine_rank(const Face& ids) const {
    if (ids.empty()) return -1;
    const int rows = static_cast<int>(ids.size()) - 1;
    if (rows == 0) return 0;
    std::vector<Scalar> m(static_cast<std::size_t>(rows) * dim_);
    const Scalar* base = point(ids[0]);
    for (int r = 0; r < rows; ++r) {
      const Scalar* p = point(ids[r + 1]);
      for (int j = 0; j < dim_; ++j) m[r * dim_ + j] = p[j] - base[j];
    }
    return matrix_rank(m, rows, dim_, pol_);
  }

  /// Faces of dimension face_dim - 1 of a face of dimension face_dim.
  std::vector<Face> subfaces(const Face& face, int face_dim) const {
    std::vector<Face> out;
    Face inter;
    for (const auto& set : sets_) {
      inter.clear();
      std::set_intersection(face.begin(), face.end(), set.begin(), set.end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) < face_dim || inter.size() == face.size()) continue;
      if (std::find(out.begin(), out.end(), inter) != out.end()) continue;
      if (affine_rank(inter) == face_dim - 1) out.push_back(inter);
    }
    return out;
  }

  /// Pulling triangulation of a face: simplices of face_dim + 1 vertex ids.
  std::vector<Face> triangulate(const Face& face, int face_dim) const {
    std::vector<Face> out;
    if (face.empty()) return out;
    if (face_dim == 0) {
      out.push_back({face.front()});
      return out;
    }
    const int apex = face.front();
    for (const Face& sub : subfaces(face, face_dim)) {
      if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
      for (Face simplex : triangulate(sub, face_dim - 1)) {
        simplex.push_back(apex);
        out.push_back(std::move(simplex));
      }
    }
    return out;
  }

  /// dim! times the signed volume of a full-dimensional simplex.
  Scalar simplex_det(const Face& simplex) const {
    std::vector<Scalar> m(static_cast<std::size_t>(dim_) * dim_);
    const Scalar* base = point(simplex[0]);
    for (int r = 0; r < dim_; ++r) {
      const Scalar* p = point(simplex[r + 1]);
      for (int j = 0; j < dim_; ++j) m[r * dim_ + j] = p[j] - base[j];
    }
    return determinant(m, dim_);
  }

 private:
  int dim_;
  const std::vector<Scalar>& vertices_;
  const std::vector<std::vector<int>>& sets_;
  Policy pol_;
};

}  // namespace cubesec::detail
