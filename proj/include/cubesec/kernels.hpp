#pragma once

// Data-parallel kernels. Each has a serial reference implementation kept for
// testing and benchmarking; the OpenMP variants produce bit-identical output
// because per-item results are merged in item order.

#include <span>
#include <vector>

#include "cubesec/detail/lattice.hpp"
#include "cubesec/frame.hpp"
#include "cubesec/polytope.hpp"

namespace cubesec::kernels {

/// Vertex candidates of a slab system (feasible solutions of every
/// dim-subset, before deduplication), in lexicographic subset order.
std::vector<double> vertex_candidates_serial(const detail::SlabSystem<double>& sys,
                                             const detail::FloatPolicy& pol);
std::vector<double> vertex_candidates_parallel(const detail::SlabSystem<double>& sys,
                                               const detail::FloatPolicy& pol);

/// vol_k Q(S) for a batch of frames.
std::vector<double> section_volumes_serial(std::span<const Frame> frames);
std::vector<double> section_volumes_parallel(std::span<const Frame> frames);

/// Thread count used by the parallel kernels. Throws DomainError below 1.
int max_threads();
void set_max_threads(int threads);

}  // namespace cubesec::kernels
