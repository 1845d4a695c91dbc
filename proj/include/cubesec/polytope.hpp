#pragma once

// Sections of the cube generated by a frame, Q(S) = { x : |<x, v_i>| <= 1 },
// and general polytopes P(W) = { x : <x, w> <= 1 for w in W }. Vertices come
// from brute-force dim-subset solving; facets are grouped by active
// constraint set and carry their measure and centroid.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cubesec/frame.hpp"

namespace cubesec {

namespace detail {
struct PolytopeAssembler;
}

inline constexpr double kGeomTolerance = 1e-9;

struct GeometryOptions {
  double eps_geom = kGeomTolerance;
  bool parallel = false;  // OpenMP vertex enumeration
};

/// Constraint label: generator index and side. For P(W) the sign is always +1
/// and the index is the column of W.
struct SignedIndex {
  int index;
  int sign;
  auto operator<=>(const SignedIndex&) const = default;
};

struct FacetRecord {
  std::vector<SignedIndex> normal_indices;  // every constraint whose hyperplane holds the facet
  std::vector<int> vertices;                // ids into SectionPolytope::vertices(), sorted
  Eigen::VectorXd normal;                   // scaled outer normal w: facet lies in <x, w> = 1
  std::vector<std::vector<int>> simplices;  // triangulation into (k-1)-simplices
  double measure = 0.0;                     // (k-1)-volume
  Eigen::VectorXd centroid;

  /// Number of generators corresponding to this facet (d).
  int multiplicity() const { return static_cast<int>(normal_indices.size()); }
};

class SectionPolytope {
 public:
  int dim() const { return dim_; }
  const std::vector<Eigen::VectorXd>& vertices() const { return vertices_; }
  const std::vector<FacetRecord>& facets() const { return facets_; }
  /// Every constraint as a one-sided half-space normal (columns; 2n for a
  /// section) and the label of each column.
  const Eigen::MatrixXd& normals() const { return normals_; }
  const std::vector<SignedIndex>& labels() const { return labels_; }
  /// Frame the section was built from (empty for P(W)).
  const std::optional<Frame>& generator() const { return generator_; }
  const GeometryOptions& options() const { return options_; }

  /// Facet whose hyperplane is the given constraint, or nullptr when that
  /// constraint only touches the polytope in a lower-dimensional face.
  const FacetRecord* facet_of(SignedIndex label) const;

 private:
  friend struct detail::PolytopeAssembler;

  int dim_ = 0;
  std::vector<Eigen::VectorXd> vertices_;
  std::vector<FacetRecord> facets_;
  Eigen::MatrixXd normals_;
  std::vector<SignedIndex> labels_;
  std::optional<Frame> generator_;
  GeometryOptions options_;
};

/// P(W) for the columns of `normals` (must be bounded).
SectionPolytope build_polytope(const Eigen::MatrixXd& normals, const GeometryOptions& opts = {});

/// Q(S). Zero vectors contribute no constraint.
SectionPolytope build_section(const Frame& s, const GeometryOptions& opts = {});

/// vol_k P computed from the constraints alone by recursive facet
/// decomposition; stable when constraints are nearly parallel.
double volume(const SectionPolytope& p);

/// Same computation without building vertices: P(W) for the columns of
/// `normals`, or Q(S).
double halfspace_volume(const Eigen::MatrixXd& normals);
double section_volume(const Frame& s);

/// Pyramid decomposition over the enumerated facets: sum of
/// (1/k) dist(0, F) vol_{k-1}(F).
double pyramid_volume(const SectionPolytope& p);

/// vol(co{0, F}) for every facet, in facet order.
std::vector<double> pyramid_volumes(const SectionPolytope& p);

/// Independent route: pulling triangulation of the whole polytope from one
/// vertex, summing |det| / k!.
double triangulated_volume(const SectionPolytope& p);

/// Centroid recomputed from the facet's triangulation. Throws DomainError on
/// a degenerate (zero-measure) facet.
Eigen::VectorXd facet_centroid(const SectionPolytope& p, const FacetRecord& f);

/// First-order volume change h * vol_{k-1}(F) when the facet's half-space is
/// moved by h along its outer normal.
double shift_facet_predict(const SectionPolytope& p, const FacetRecord& f, double h);

/// First-order volume change when the facet normal w becomes w + t u, for a
/// unit u orthogonal to w: -(vol_{k-1}F / |w|) <c - w/|w|^2, u> t.
double rotate_facet_predict(const SectionPolytope& p, const FacetRecord& f,
                            const Eigen::VectorXd& u, double t);

/// Rebuild oracles for the two predictors: volume of P(W') where only the
/// facet's half-space (not its opposite) is changed.
double shifted_volume(const SectionPolytope& p, const FacetRecord& f, double h);
double rotated_volume(const SectionPolytope& p, const FacetRecord& f,
                      const Eigen::VectorXd& u, double t);

}  // namespace cubesec
