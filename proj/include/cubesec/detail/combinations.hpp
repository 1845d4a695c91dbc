#pragma once

#include <cstddef>
#include <vector>

namespace cubesec::detail {

inline std::size_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  std::size_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::size_t>(n - r + i) / i;
  return out;
}

/// Calls fn(subset) for every r-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All r-subsets of {0..n-1}, flattened (r entries per subset).
inline std::vector<int> all_combinations(int n, int r) {
  std::vector<int> out;
  out.reserve(binomial(n, r) * static_cast<std::size_t>(r));
  for_each_combination(n, r, [&](const std::vector<int>& s) {
    out.insert(out.end(), s.begin(), s.end());
  });
  return out;
}

}  // namespace cubesec::detail
