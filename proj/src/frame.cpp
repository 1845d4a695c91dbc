#include "cubesec/frame.hpp"

#include <algorithm>
#include <cmath>

#include "cubesec/detail/combinations.hpp"

namespace cubesec {

namespace {

// Rank test on the frame operator; relative to its scale so that a uniformly
// scaled frame is still a frame.
bool spans(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() < m.rows()) return false;
  if (!m.allFinite()) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m * m.transpose(),
                                                    Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return ev(0) > kRankFloor * std::max(1.0, ev(ev.size() - 1));
}

Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev(0) <= kRankFloor * std::max(1.0, ev(ev.size() - 1))) throw NotAFrame();
  return es.eigenvectors() * ev.cwiseInverse().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

SymMatrix::SymMatrix(int dim)
    : dim_(dim), packed_(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0) {}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix out(dim);
  for (int i = 0; i < dim; ++i) out.set(i, i, 1.0);
  return out;
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& dense) {
  if (dense.rows() != dense.cols()) throw DomainError("matrix is not square");
  const double scale = std::max(1.0, dense.cwiseAbs().maxCoeff());
  if ((dense - dense.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("matrix is not symmetric");
  SymMatrix out(static_cast<int>(dense.rows()));
  for (int i = 0; i < out.dim_; ++i)
    for (int j = i; j < out.dim_; ++j) out.set(i, j, dense(i, j));
  return out;
}

std::size_t SymMatrix::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Row-major upper triangle: row i starts after i full rows of shrinking length.
  return static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
         static_cast<std::size_t>(j - i);
}

Eigen::MatrixXd SymMatrix::dense() const {
  Eigen::MatrixXd out(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  if (other.dim_ != dim_) throw DomainError("dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < packed_.size(); ++i)
    worst = std::max(worst, std::abs(packed_[i] - other.packed_[i]));
  return worst;
}

Frame::Frame(Eigen::MatrixXd vectors) : m_(std::move(vectors)) {
  if (m_.rows() < 1) throw NotAFrame("dimension must be at least 1");
  if (!spans(m_)) throw NotAFrame();
}

TightFrame::TightFrame(Frame frame, double eps) : frame_(std::move(frame)) {
  const double defect = tightness_defect(frame_);
  if (!(defect <= eps)) throw NotTight(defect);
}

Subspace::Subspace(Eigen::MatrixXd basis_rows, double eps) : basis_(std::move(basis_rows)) {
  if (basis_.rows() < 1 || basis_.cols() < basis_.rows())
    throw DomainError("subspace basis must be k x n with 1 <= k <= n");
  const Eigen::MatrixXd g = basis_ * basis_.transpose();
  const double defect =
      (g - Eigen::MatrixXd::Identity(basis_.rows(), basis_.rows())).cwiseAbs().maxCoeff();
  if (!(defect <= eps)) throw DomainError("subspace basis is not orthonormal");
}

Subspace Subspace::span_of(const Eigen::MatrixXd& rows) {
  const Eigen::Index k = rows.rows();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(rows.transpose());
  const Eigen::MatrixXd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < k; ++i)
    if (std::abs(r(i, i)) <= 1e-12 * std::max(1.0, r.cwiseAbs().maxCoeff()))
      throw DomainError("rows are linearly dependent");
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(rows.cols(), k);
  return Subspace(q.transpose());
}

SymMatrix frame_operator(const Frame& s) {
  return SymMatrix::from_dense(s.matrix() * s.matrix().transpose());
}

double tightness_defect(const Frame& s) {
  const Eigen::MatrixXd a = s.matrix() * s.matrix().transpose();
  return (a - Eigen::MatrixXd::Identity(s.k(), s.k())).cwiseAbs().maxCoeff();
}

bool is_tight(const Frame& s, double eps) { return tightness_defect(s) <= eps; }

Eigen::MatrixXd gram(const Frame& s) { return s.matrix().transpose() * s.matrix(); }

bool same_up_to_rotation(const Frame& a, const Frame& b, double tol) {
  if (a.n() != b.n() || a.k() != b.k()) return false;
  return (gram(a) - gram(b)).cwiseAbs().maxCoeff() <= tol;
}

Whitening whiten(const Frame& s) {
  const Eigen::MatrixXd b = inverse_sqrt(s.matrix() * s.matrix().transpose());
  // A^{-1/2} M equals the polar factor U V^T of M = U S V^T; the SVD route
  // stays accurate when A is badly conditioned.
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  return Whitening{SymMatrix::from_dense(0.5 * (b + b.transpose())),
                   TightFrame(Frame(svd.matrixU() * svd.matrixV().transpose()), 1e-9)};
}

RankOneDeterminant det_rank_one(const SymMatrix& a, const Eigen::VectorXd& u,
                                UpdateSign sign) {
  if (u.size() != a.dim()) throw DomainError("vector length does not match matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.dense());
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (!(ev(0) > 0.0)) throw DomainError("matrix is not positive definite");
  // |A^{-1/2} u|^2 in the eigenbasis.
  const Eigen::VectorXd coords = es.eigenvectors().transpose() * u;
  const double whitened = (coords.array().square() / ev.array()).sum();
  const double det = ev.prod();
  const double factor = sign == UpdateSign::plus ? 1.0 + whitened : 1.0 - whitened;
  return RankOneDeterminant{factor * det, sign == UpdateSign::plus || whitened < 1.0};
}

double sqrt_det_first_order(const TightFrame& s, const Eigen::MatrixXd& perturbation) {
  if (perturbation.rows() != s.k() || perturbation.cols() != s.n())
    throw DomainError("perturbation must have one k-vector per frame vector");
  return (perturbation.array() * s.matrix().array()).sum();
}

double sqrt_det_slope(const TightFrame& s, const Eigen::MatrixXd& perturbation, double t) {
  if (perturbation.rows() != s.k() || perturbation.cols() != s.n())
    throw DomainError("perturbation must have one k-vector per frame vector");
  const Eigen::MatrixXd moved = s.matrix() + t * perturbation;
  const double det = (moved * moved.transpose()).ldlt().vectorD().prod();
  return (std::sqrt(det) - 1.0) / t;
}

Frame frame_edit(const Frame& s, const FrameEdit& e) {
  const Eigen::MatrixXd& m = s.matrix();
  auto without = [&](int idx) {
    Eigen::MatrixXd out(m.rows(), m.cols() - 1);
    out << m.leftCols(idx), m.rightCols(m.cols() - idx - 1);
    return out;
  };
  auto check_index = [&](int idx) {
    if (idx < 0 || idx >= s.n()) throw DomainError("edit index out of range");
  };
  auto check_vector = [&](const Eigen::VectorXd& v) {
    if (v.size() != s.k()) throw DomainError("edit vector has wrong dimension");
  };

  return std::visit(
      [&](const auto& op) -> Frame {
        using Op = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<Op, edit::RemoveIndex>) {
          check_index(op.index);
          return Frame(without(op.index));
        } else if constexpr (std::is_same_v<Op, edit::RemoveVector>) {
          check_vector(op.vector);
          for (int i = 0; i < s.n(); ++i)
            if (m.col(i) == op.vector) return Frame(without(i));
          throw DomainError("vector to remove is not in the frame");
        } else if constexpr (std::is_same_v<Op, edit::Substitute>) {
          check_index(op.index);
          check_vector(op.vector);
          Eigen::MatrixXd out = m;
          out.col(op.index) = op.vector;
          return Frame(std::move(out));
        } else {
          check_vector(op.vector);
          Eigen::MatrixXd out(m.rows(), m.cols() + 1);
          out << m, op.vector;
          return Frame(std::move(out));
        }
      },
      e);
}

Subspace subspace_from_frame(const TightFrame& s, double eps) {
  // M M^T = I, so the rows of M are already an orthonormal basis of H.
  const double defect = tightness_defect(s);
  if (!(defect <= std::max(eps, kOrthTolerance))) throw NotTight(defect);
  return Subspace(s.matrix(), std::max(eps, kOrthTolerance));
}

TightFrame frame_from_subspace(const Subspace& h) {
  // Coordinates of P_H e_i in the basis of H are exactly the columns of the basis.
  return TightFrame(Frame(h.basis()));
}

Eigen::VectorXd cross_product(const Eigen::MatrixXd& vectors) {
  const Eigen::Index k = vectors.rows();
  if (vectors.cols() != k - 1) throw DomainError("cross product needs k-1 vectors in R^k");
  Eigen::VectorXd out(k);
  if (k == 1) {
    out(0) = 1.0;
    return out;
  }
  Eigen::MatrixXd m(k, k);
  m.leftCols(k - 1) = vectors;
  for (Eigen::Index j = 0; j < k; ++j) {
    m.col(k - 1).setZero();
    m(j, k - 1) = 1.0;
    out(j) = m.determinant();
  }
  return out;
}

Eigen::MatrixXd cross_product_frame(const TightFrame& s, std::size_t cap) {
  const int k = s.k();
  const int n = s.n();
  const std::size_t count = detail::binomial(n, k - 1);
  if (count > cap) throw DomainError("cross product frame exceeds the configured size cap");
  Eigen::MatrixXd out(k, static_cast<Eigen::Index>(count));
  Eigen::MatrixXd block(k, k - 1);
  Eigen::Index col = 0;
  detail::for_each_combination(n, k - 1, [&](const std::vector<int>& subset) {
    for (int j = 0; j < k - 1; ++j) block.col(j) = s.matrix().col(subset[j]);
    out.col(col++) = cross_product(block);
  });
  return out;
}

}  // namespace cubesec
