#pragma once

#include <cstdint>
#include <vector>

namespace rftfl::detail {

// Calls fn(indices) for every size-k combination of {0,...,m-1} in
// lexicographic order. k == 0 yields one empty combination.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
}

// Combinations of every size 0..max_k, ascending size, lexicographic within
// a size.
template <typename Fn>
void for_each_subset_up_to(int m, int max_k, Fn&& fn) {
  for (int k = 0; k <= max_k && k <= m; ++k) for_each_combination(m, k, fn);
}

// Number of subsets of an m-element set with size <= max_k, saturating.
inline std::uint64_t subset_count_up_to(std::uint64_t m, std::uint64_t max_k) {
  constexpr std::uint64_t kSaturated = ~0ull;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(m, 0)
  for (std::uint64_t k = 0;; ++k) {
    if (total > kSaturated - binom) return kSaturated;
    total += binom;
    if (k == max_k || k == m) return total;
    // C(m, k+1) = C(m, k) * (m - k) / (k + 1)
    std::uint64_t num = m - k;
    if (binom > kSaturated / num) return kSaturated;
    binom = binom * num / (k + 1);
  }
}

}  // namespace rftfl::detail
