#pragma once

// Frames in R^k, tight (Parseval) frames, frame operators and the
// conversions between tight frames and k-dimensional subspaces of R^n.
//
// A frame is stored as the k x n matrix M whose columns are the vectors
// v_1, ..., v_n. Everything here is a value type and immutable once built.

#include <cstddef>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cubesec/error.hpp"

namespace cubesec {

inline constexpr double kTightTolerance = 1e-10;
inline constexpr double kOrthTolerance = 1e-12;
inline constexpr double kRankFloor = 1e-12;

/// Symmetric k x k matrix; only the upper triangle is stored.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);
  /// Takes the upper triangle of `dense`. Throws if `dense` is not square or
  /// not symmetric to within 1e-12 relative.
  static SymMatrix from_dense(const Eigen::MatrixXd& dense);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return packed_[slot(i, j)]; }
  void set(int i, int j, double value) { packed_[slot(i, j)] = value; }

  Eigen::MatrixXd dense() const;
  double max_abs_diff(const SymMatrix& other) const;

 private:
  std::size_t slot(int i, int j) const;

  int dim_ = 0;
  std::vector<double> packed_;
};

class Frame {
 public:
  /// `vectors` is k x n with the frame vectors as columns. Zero columns are
  /// allowed; the columns must span R^k or NotAFrame is thrown.
  explicit Frame(Eigen::MatrixXd vectors);

  int k() const { return static_cast<int>(m_.rows()); }
  int n() const { return static_cast<int>(m_.cols()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::VectorXd vector(int i) const { return m_.col(i); }

  bool operator==(const Frame& other) const { return m_ == other.m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Frame whose frame operator is the identity to within a tolerance.
class TightFrame {
 public:
  explicit TightFrame(Frame frame, double eps = kTightTolerance);

  const Frame& frame() const { return frame_; }
  operator const Frame&() const { return frame_; }  // NOLINT(google-explicit-constructor)

  int k() const { return frame_.k(); }
  int n() const { return frame_.n(); }
  const Eigen::MatrixXd& matrix() const { return frame_.matrix(); }
  Eigen::VectorXd vector(int i) const { return frame_.vector(i); }

 private:
  Frame frame_;
};

/// k-dimensional subspace H of R^n given by an orthonormal basis (rows).
class Subspace {
 public:
  explicit Subspace(Eigen::MatrixXd basis_rows, double eps = kOrthTolerance);

  /// Orthonormalizes the row span of `rows` (which must have full row rank).
  static Subspace span_of(const Eigen::MatrixXd& rows);

  int n() const { return static_cast<int>(basis_.cols()); }
  int k() const { return static_cast<int>(basis_.rows()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  /// Orthogonal projection onto H as an n x n matrix.
  Eigen::MatrixXd projector() const { return basis_.transpose() * basis_; }

 private:
  Eigen::MatrixXd basis_;
};

/// A_S = sum of v_i v_i^T.
SymMatrix frame_operator(const Frame& s);

/// max |A_S - I|.
double tightness_defect(const Frame& s);
bool is_tight(const Frame& s, double eps = kTightTolerance);

/// n x n Gram matrix M^T M. Two frames differ by an element of O(k) iff
/// their Gram matrices agree.
Eigen::MatrixXd gram(const Frame& s);
bool same_up_to_rotation(const Frame& a, const Frame& b, double tol = 1e-10);

struct Whitening {
  SymMatrix transform;  // A_S^{-1/2}
  TightFrame tight;     // { A_S^{-1/2} v_i }
};

/// Maps a frame to a tight frame with B = A_S^{-1/2} (symmetric eigensolver).
Whitening whiten(const Frame& s);

enum class UpdateSign { plus, minus };

struct RankOneDeterminant {
  double value;
  // False when the minus update leaves the positive definite cone
  // (|A^{-1/2} u| >= 1); `value` is still the determinant.
  bool positive_definite;
};

/// det(A +- u u^T) = (1 +- |A^{-1/2} u|^2) det A. Throws DomainError when A is
/// not positive definite.
RankOneDeterminant det_rank_one(const SymMatrix& a, const Eigen::VectorXd& u,
                                UpdateSign sign);

/// First-order coefficient of sqrt(det A) along S + tX for tight S:
/// sum <x_i, v_i>. `perturbation` is k x n like the frame matrix.
double sqrt_det_first_order(const TightFrame& s, const Eigen::MatrixXd& perturbation);

/// Finite-difference slope (sqrt(det A_{S+tX}) - 1) / t used to validate the
/// first-order coefficient.
double sqrt_det_slope(const TightFrame& s, const Eigen::MatrixXd& perturbation, double t);

namespace edit {
struct RemoveIndex {
  int index;
};
/// Drops the first column equal to `vector`.
struct RemoveVector {
  Eigen::VectorXd vector;
};
struct Substitute {
  int index;
  Eigen::VectorXd vector;
};
struct Append {
  Eigen::VectorXd vector;
};
}  // namespace edit

using FrameEdit =
    std::variant<edit::RemoveIndex, edit::RemoveVector, edit::Substitute, edit::Append>;

/// Applies one edit; the result must still span R^k.
Frame frame_edit(const Frame& s, const FrameEdit& e);

Subspace subspace_from_frame(const TightFrame& s, double eps = kTightTolerance);
TightFrame frame_from_subspace(const Subspace& h);

/// Cross products [v_L] over all (k-1)-subsets L of [n] in lexicographic
/// order, as the columns of a k x C(n, k-1) matrix. For k = 1 the result is
/// the single vector (1). Throws DomainError above `cap` columns.
Eigen::MatrixXd cross_product_frame(const TightFrame& s, std::size_t cap = 2'000'000);

/// Generalized cross product of k-1 vectors in R^k (columns of `vectors`):
/// the x with <x, y> = det(x_1, ..., x_{k-1}, y).
Eigen::VectorXd cross_product(const Eigen::MatrixXd& vectors);

}  // namespace cubesec
