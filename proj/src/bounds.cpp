#include "teachlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "teachlab/combinatorics.hpp"

namespace teachlab {

BigInt sauer_phi(int d, int m) {
  if (d < 0 || m < 0) throw InputError("sauer_phi needs d, m >= 0");
  BigInt s = 0;
  for (int i = 0; i <= std::min(d, m); ++i) s += big_binomial(m, i);
  return s;
}

BigInt ksz_bound(int n, int d) {
  if (d < 0 || d > n) throw InputError("ksz bound needs 0 <= d <= n");
  return (BigInt(1) << d) * big_binomial(n, d);
}

double improved_factor(int d) {
  if (d < 1) throw InputError("improved factor needs d >= 1");
  const double x = 2.0 / (d + 1);
  return 2.0 * std::sqrt(x) - x;
}

int default_t(int d) {
  int t = 0;
  while ((t + 1) * (t + 1) <= 2 * (d + 1)) ++t;
  return t;
}

namespace {

void check_t(int d, int t) {
  if (t < 2 || t > d)
    throw InputError("t must satisfy 2 <= t <= d (got t=" + std::to_string(t) + ", d=" + std::to_string(d) + ")");
}

}  // namespace

Rational gub_bound(int n, int d, int t, const Rational& h) {
  if (d < 0 || d > n) throw InputError("bound needs 0 <= d <= n");
  check_t(d, t);
  if (h < 0 || h > 1) throw InputError("h must lie in [0, 1]");
  Rational share = h + (1 - h) * Rational(2, t + 1);
  return share * Rational(ksz_bound(n, d));
}

Rational corollary_d2_bound(int n) {
  if (n < 2) throw InputError("the d=2 bound needs n >= 2");
  return Rational((5 * BigInt(n) - 4) * n, 3);
}

const char* to_string(HKind k) { return k == HKind::exact ? "exact" : "upper-bound"; }

HChoice auto_h(int n, int d, int t) {
  check_t(d, t);
  if (d > n) throw InputError("bound needs d <= n");
  if (n == d) return {Rational(1), HKind::exact};
  HChoice cap{Rational(t, d + 1), HKind::upper_bound};
  if (binomial(n, d) > HMaxOptions{}.size_cap) return cap;
  Budget budget = Budget::nodes(kAutoHNodes);
  HMaxResult r = h_max(n, d, t, budget);
  if (!r.exact) return cap;
  Rational exact = h_ratio(n, d, r);
  return exact <= cap.h ? HChoice{exact, HKind::exact} : cap;
}

std::vector<std::pair<InstanceSet, int>> multiplicities(const NCTeacher& teacher) {
  if (!teacher.normalized()) throw InputError("teacher is not normalized (sets of unequal size)");
  std::map<std::string, std::pair<InstanceSet, int>> by_set;
  for (const auto& s : teacher.sets) {
    auto [it, fresh] = by_set.try_emplace(s.to_string(), s, 0);
    ++it->second.second;
  }
  std::vector<std::pair<InstanceSet, int>> out;
  for (auto& [key, v] : by_set) out.push_back(v);
  return out;
}

KSetFamily heavy_sets(const NCTeacher& teacher, int t) {
  const int n = teacher.concepts.domain_size();
  const int d = teacher.order();
  auto counts = multiplicities(teacher);
  check_t(d, t);
  KSetFamily out(n, d);
  const BigInt threshold = BigInt(1) << (d + 1);
  for (const auto& [s, m] : counts)
    if (BigInt(m) * (t + 1) > threshold) out.add(s);
  return out.sorted();
}

double chernoff_bound(double p, long long m, double gamma) {
  if (!(p > 0 && p <= 1)) throw InputError("chernoff bound needs 0 < p <= 1");
  if (m < 1) throw InputError("chernoff bound needs m >= 1");
  if (!(gamma >= 0 && gamma <= 1)) throw InputError("chernoff bound needs 0 <= gamma <= 1");
  return std::exp(-p * static_cast<double>(m) * gamma * gamma / 2);
}

BoundReport bound_report(int n, int d, std::optional<int> t) {
  if (d < 1 || d > n) throw InputError("bounds need 1 <= d <= n");
  BoundReport r;
  r.n = n;
  r.d = d;
  r.ksz = ksz_bound(n, d);
  r.factor = improved_factor(d);
  if (!t && default_t(d) <= d) t = default_t(d);
  if (!t) {
    // No admissible t: the heavy-set argument gives nothing beyond ksz.
    r.gub = Rational(r.ksz);
    r.h_used = 1;
    r.h_kind = HKind::upper_bound;
    return r;
  }
  r.t = t;
  HChoice h = auto_h(n, d, *t);
  r.h_used = h.h;
  r.h_kind = h.kind;
  r.gub = gub_bound(n, d, *t, h.h);
  return r;
}

}  // namespace teachlab
