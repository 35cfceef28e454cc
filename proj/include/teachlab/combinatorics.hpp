#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "teachlab/concepts.hpp"

namespace teachlab {

/// C(n, k) in 64 bits; 0 outside 0 <= k <= n. Throws std::overflow_error if it does not fit.
inline std::uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

/// Calls f(positions) for every k-subset of {0..n-1}, positions ascending, in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(static_cast<const std::vector<int>&>(c));
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// All k-subsets of [n] as instance sets, lexicographic by ascending member lists.
inline std::vector<InstanceSet> k_subsets_lex(int n, int k) {
  std::vector<InstanceSet> out;
  for_each_combination(n, k, [&](const std::vector<int>& c) {
    InstanceSet s(n);
    for (int p : c) s.set(p);
    out.push_back(std::move(s));
  });
  return out;
}

/// Colex rank of a k-subset given by ascending 0-based positions.
inline std::uint64_t colex_rank(const std::vector<int>& positions) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) r += binomial(positions[i], static_cast<long long>(i) + 1);
  return r;
}

}  // namespace teachlab
