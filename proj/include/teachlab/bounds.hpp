#pragma once

#include <cstdint>
#include <optional>

#include "teachlab/johnson.hpp"
#include "teachlab/nc_teaching.hpp"
#include "teachlab/rational.hpp"

namespace teachlab {

/// Sum of C(m, i) for i = 0..d.
BigInt sauer_phi(int d, int m);

/// 2^d * C(n, d).
BigInt ksz_bound(int n, int d);

/// 2 sqrt(2/(d+1)) - 2/(d+1). Equals 1 at d = 1, below 1 after.
double improved_factor(int d);

/// floor(sqrt(2(d+1))).
int default_t(int d);

/// (h + (1 - h) * 2/(t+1)) * 2^d * C(n, d). Requires 2 <= t <= d <= n and 0 <= h <= 1.
Rational gub_bound(int n, int d, int t, const Rational& h);

/// (5n - 4) n / 3.
Rational corollary_d2_bound(int n);

enum class HKind { exact, upper_bound };
const char* to_string(HKind k);

struct HChoice {
  Rational h;
  HKind kind = HKind::upper_bound;
};

/// Node limit for the exact h_t(n, d) attempted by auto_h.
inline constexpr std::uint64_t kAutoHNodes = 2'000'000;

/// min(h_t(n, d) if solvable within kAutoHNodes, t/(d+1)); 1 when n = d.
HChoice auto_h(int n, int d, int t);

/// Teaching sets assigned to more than 2^(d+1)/(t+1) concepts. The teacher
/// must be normalized; d is its order and 2 <= t <= d.
KSetFamily heavy_sets(const NCTeacher& teacher, int t);

/// Number of concepts assigned each set of a normalized teacher, keyed by the set.
std::vector<std::pair<InstanceSet, int>> multiplicities(const NCTeacher& teacher);

/// exp(-p m gamma^2 / 2). Requires 0 < p <= 1, m >= 1, 0 <= gamma <= 1.
double chernoff_bound(double p, long long m, double gamma);

struct BoundReport {
  int n = 0, d = 0;
  std::optional<int> t;  // absent when no t in [2, d] exists (d = 1)
  BigInt ksz;
  Rational gub;
  double factor = 1.0;
  Rational h_used;
  HKind h_kind = HKind::exact;
};

/// Report for 1 <= d <= n; t defaults to default_t(d).
BoundReport bound_report(int n, int d, std::optional<int> t);

}  // namespace teachlab
