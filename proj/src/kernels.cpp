#include "cubesec/kernels.hpp"

#include <omp.h>

#include <cstdlib>

#include "cubesec/detail/combinations.hpp"

namespace cubesec::kernels {

std::vector<double> vertex_candidates_serial(const detail::SlabSystem<double>& sys,
                                             const detail::FloatPolicy& pol) {
  std::vector<double> out, scratch, inv;
  detail::for_each_combination(sys.size(), sys.dim, [&](const std::vector<int>& subset) {
    detail::subset_vertices(sys, subset.data(), pol, out, scratch, inv);
  });
  return out;
}

std::vector<double> vertex_candidates_parallel(const detail::SlabSystem<double>& sys,
                                               const detail::FloatPolicy& pol) {
  const std::vector<int> subsets = detail::all_combinations(sys.size(), sys.dim);
  const long count = sys.dim == 0 ? 0 : static_cast<long>(subsets.size() / sys.dim);
  std::vector<std::vector<double>> per_subset(count);
#pragma omp parallel
  {
    std::vector<double> scratch, inv;
#pragma omp for schedule(static)
    for (long s = 0; s < count; ++s)
      detail::subset_vertices(sys, subsets.data() + s * sys.dim, pol, per_subset[s], scratch,
                              inv);
  }
  std::vector<double> out;
  for (const auto& part : per_subset) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<double> section_volumes_serial(std::span<const Frame> frames) {
  std::vector<double> out;
  out.reserve(frames.size());
  for (const Frame& f : frames) out.push_back(section_volume(f));
  return out;
}

std::vector<double> section_volumes_parallel(std::span<const Frame> frames) {
  std::vector<double> out(frames.size());
  const long count = static_cast<long>(frames.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = section_volume(frames[i]);
  return out;
}

int max_threads() { return omp_get_max_threads(); }

void set_max_threads(int threads) {
  if (threads < 1) throw DomainError("thread count must be positive");
  omp_set_num_threads(threads);
}

}  // namespace cubesec::kernels
