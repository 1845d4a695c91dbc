#include "cubesec/random.hpp"

namespace cubesec {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Eigen::MatrixXd gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

Eigen::VectorXd random_unit_vector(int dim, Rng& rng) {
  while (true) {
    Eigen::VectorXd v = gaussian_matrix(dim, 1, rng).col(0);
    const double norm = v.norm();
    if (norm > 1e-8) return v / norm;
  }
}

Frame random_frame(int n, int k, Rng& rng) {
  if (k < 1 || n < k) throw DomainError("random frame needs n >= k >= 1");
  while (true) {
    try {
      return Frame(gaussian_matrix(k, n, rng));
    } catch (const NotAFrame&) {
    }
  }
}

TightFrame random_tight_frame(int n, int k, Rng& rng) {
  return whiten(random_frame(n, k, rng)).tight;
}

}  // namespace cubesec
