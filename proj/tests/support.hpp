#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles
// work straight from the definitions and share no search code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "teachlab/concepts.hpp"
#include "teachlab/johnson.hpp"
#include "teachlab/nc_teaching.hpp"
#include "teachlab/random.hpp"

namespace testing {

using namespace teachlab;

inline Concept concept_of(int n, std::uint64_t bits) {
  Concept c(n);
  for (int b = 0; b < n; ++b)
    if ((bits >> b) & 1U) c.set(b);
  return c;
}

inline InstanceSet set_of(int n, std::uint64_t bits) {
  InstanceSet s(n);
  for (int b = 0; b < n; ++b)
    if ((bits >> b) & 1U) s.set(b);
  return s;
}

/// Uniform random class of `size` distinct concepts over [n], n <= 20.
inline ConceptClass random_class(SplitMix64& rng, int n, std::size_t size) {
  ConceptClass k(n);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  size = std::min<std::size_t>(size, std::size_t{1} << n);
  while (k.size() < size) k.add(concept_of(n, rng() & mask));
  return k;
}

inline int uniform_int(SplitMix64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Smallest |S| such that S separates c from every other concept; plain subset enumeration.
inline int brute_td(const ConceptClass& k, const Concept& c) {
  const int n = k.domain_size();
  int best = n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    InstanceSet s = set_of(n, m);
    if (s.count() >= best) continue;
    bool ok = true;
    for (const auto& o : k)
      if (!(o == c) && agrees_on(c, o, s)) {
        ok = false;
        break;
      }
    if (ok) best = s.count();
  }
  return best;
}

inline int brute_td_min(const ConceptClass& k) {
  int best = k.domain_size();
  for (const auto& c : k) best = std::min(best, brute_td(k, c));
  return best;
}

/// All subsets of [n] with exactly d elements.
inline std::vector<InstanceSet> d_subsets(int n, int d) {
  std::vector<InstanceSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (__builtin_popcountll(m) == d) out.push_back(set_of(n, m));
  return out;
}

/// True iff some assignment of d-subsets has no clash, by trying all of them.
inline bool brute_nc_teacher_exists(const ConceptClass& k, int d) {
  const auto options = d_subsets(k.domain_size(), d);
  const std::size_t m = k.size();
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = i + 1; j < m && ok; ++j)
        if (agrees_on(k[i], k[j], options[pick[i]] | options[pick[j]])) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && ++pick[i] == options.size()) pick[i++] = 0;
    if (i == m) return false;
  }
}

inline int brute_nctd(const ConceptClass& k) {
  for (int d = 0; d <= k.domain_size(); ++d)
    if (brute_nc_teacher_exists(k, d)) return d;
  return -1;
}

/// Largest number of members in any (k+1)-subset, counted directly.
inline int max_members_in_superset(const KSetFamily& f) {
  int worst = 0;
  const int n = f.n();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (__builtin_popcountll(m) != f.k() + 1) continue;
    InstanceSet d = set_of(n, m);
    int c = 0;
    for (const auto& a : f.members()) c += a.is_subset_of(d);
    worst = std::max(worst, c);
  }
  return worst;
}

/// H_t(n, k) by trying every subfamily; only for C(n, k) <= 20.
inline int brute_h_max(int n, int k, int t) {
  const auto sets = d_subsets(n, k);
  const auto supers = d_subsets(n, k + 1);
  std::vector<std::uint32_t> members_of(supers.size(), 0);
  for (std::size_t s = 0; s < supers.size(); ++s)
    for (std::size_t a = 0; a < sets.size(); ++a)
      if (sets[a].is_subset_of(supers[s])) members_of[s] |= 1U << a;
  int best = 0;
  for (std::uint32_t fam = 0; fam < (1U << sets.size()); ++fam) {
    int size = __builtin_popcount(fam);
    if (size <= best) continue;
    bool ok = std::all_of(members_of.begin(), members_of.end(),
                          [&](std::uint32_t m) { return __builtin_popcount(fam & m) <= t; });
    if (ok) best = size;
  }
  return best;
}

/// Most edges in a triangle-free graph on v vertices, by trying every graph.
inline int brute_triangle_free_edges(int v) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
  auto idx = [&](int i, int j) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p] == std::pair{std::min(i, j), std::max(i, j)}) return static_cast<int>(p);
    return -1;
  };
  std::vector<std::uint32_t> triangles;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c)
        triangles.push_back((1U << idx(a, b)) | (1U << idx(a, c)) | (1U << idx(b, c)));
  int best = 0;
  for (std::uint32_t g = 0; g < (1U << pairs.size()); ++g) {
    int e = __builtin_popcount(g);
    if (e <= best) continue;
    if (std::none_of(triangles.begin(), triangles.end(), [&](std::uint32_t t) { return (g & t) == t; })) best = e;
  }
  return best;
}

/// Pr[Binomial(m, p) < x], summed term by term.
inline long double binomial_lower_tail(int m, long double p, long double x) {
  if (p >= 1) return m < x ? 1 : 0;
  long double total = 0;
  for (int i = 0; i < m + 1 && i < x; ++i) {
    long double logc = std::lgamma(m + 1.0L) - std::lgamma(i + 1.0L) - std::lgamma(m - i + 1.0L);
    total += std::exp(logc + i * std::log(p) + (m - i) * std::log1p(-p));
  }
  return total;
}

}  // namespace testing
