#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "cubesec/frame.hpp"

namespace cubesec {

using Rng = std::mt19937_64;

/// Independent, reproducible stream per (seed, stream) pair.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

Eigen::MatrixXd gaussian_matrix(int rows, int cols, Rng& rng);
Eigen::VectorXd random_unit_vector(int dim, Rng& rng);

/// k x n Gaussian frame (redrawn in the measure-zero rank-deficient case).
Frame random_frame(int n, int k, Rng& rng);

/// Whitened Gaussian frame.
TightFrame random_tight_frame(int n, int k, Rng& rng);

}  // namespace cubesec
