#include "teachlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "teachlab/bounds.hpp"
#include "teachlab/classical.hpp"
#include "teachlab/combinatorics.hpp"
#include "teachlab/nc_teaching.hpp"
#include "teachlab/parallel.hpp"
#include "teachlab/random.hpp"

namespace teachlab {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real log2r(const Real& x) { return boost::multiprecision::log(x) / boost::multiprecision::log(Real(2)); }

Real log2_binomial(std::uint64_t n, long long k) {
  Real s = 0;
  for (long long i = 1; i <= k; ++i) s += log2r(Real(n - static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(i))) - log2r(Real(i));
  return s;
}

Real pow2(long long e) { return boost::multiprecision::ldexp(Real(1), static_cast<int>(e)); }

}  // namespace

Threshold threshold_k(std::uint64_t n, int offset) {
  if (n < 2) throw InputError("threshold needs n >= 2");
  Real kp = log2r(Real(n)) - 2 * log2r(log2r(Real(2) * n)) - offset;
  return {kp.convert_to<double>(), boost::multiprecision::floor(kp).convert_to<long long>()};
}

ClaimPoint claim_check(std::uint64_t n) {
  ClaimPoint p;
  p.n = n;
  const Real log2e = 1 / boost::multiprecision::log(Real(2));
  const Real l2n = log2r(Real(2) * n);

  p.k = threshold_k(n, 4).k;
  p.applicable = p.k >= 1;
  if (p.applicable) {
    const long long k = p.k;
    p.ineq1 = BigInt(n) - k >= BigInt(1) << (k + 2);
    Real lhs2 = log2_binomial(n, k) + k - Real(n - static_cast<std::uint64_t>(k)) / pow2(k + 3) * log2e;
    p.ineq2 = lhs2 < 0;
    p.sufficient = k * l2n - Real(n) / pow2(k + 4) < 0;
  }

  p.k5 = threshold_k(n, 5).k;
  p.applicable5 = p.k5 >= 1;
  if (p.applicable5) {
    const long long k = p.k5;
    p.ineq1_5 = BigInt(n) >= BigInt(1) << (k + 3);
    Real lhs2 = log2_binomial(n, k) + k - Real(n) / pow2(k + 4) * log2e;
    p.ineq2_5 = lhs2 < -l2n * l2n;
    p.sufficient5 = k * l2n - Real(n) / pow2(k + 4) < -l2n * l2n;
  }
  return p;
}

std::vector<std::uint64_t> claim_grid(std::uint64_t scan_max) {
  if (scan_max < 2) throw InputError("scan needs a maximum of at least 2");
  const std::uint64_t dense = std::min<std::uint64_t>(scan_max, 1ULL << 16);
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 2; n <= dense; ++n) grid.push_back(n);
  for (int e = 16; e < 64 && grid.back() < scan_max; ++e)
    for (int j = 1; j <= 64; ++j) {
      auto n = static_cast<std::uint64_t>(std::floor(std::pow(2.0L, e + j / 64.0L)));
      if (n > scan_max) break;
      if (n > grid.back()) grid.push_back(n);
    }
  if (grid.back() < scan_max) grid.push_back(scan_max);
  return grid;
}

ClaimScan claim_scan(std::uint64_t scan_max) {
  ClaimScan scan;
  scan.scan_max = scan_max;
  std::vector<std::uint64_t> grid = claim_grid(scan_max);
  std::vector<ClaimPoint> points(grid.size());
  parallel_for(grid.size(), static_cast<int>(std::max(1U, std::thread::hardware_concurrency())),
               [&](std::size_t i) { points[i] = claim_check(grid[i]); });
  scan.points = points.size();
  bool holds = true, holds5 = true;
  for (std::size_t i = points.size(); i-- > 0;) {
    const ClaimPoint& p = points[i];
    holds = holds && p.applicable && p.ineq1 && p.ineq2;
    holds5 = holds5 && p.applicable5 && p.ineq1_5 && p.ineq2_5;
    if (holds) scan.n0 = p.n;
    if (holds5) scan.n0_5 = p.n;
  }
  for (const auto& p : points) {
    if (p.applicable) {
      ++scan.implication_checks;
      if (p.sufficient && !p.ineq2) ++scan.implication_failures;
    }
    if (p.applicable5 && p.sufficient5 && !p.ineq2_5) ++scan.implication_failures_5;
  }
  scan.last = points.back();
  return scan;
}

ConceptClass trial_class1(int n, std::uint64_t master_seed, int trial) {
  return class1(random_tournament(n, derive_seed(master_seed, static_cast<std::uint64_t>(trial))));
}

namespace {

void check_config(const ExperimentConfig& cfg) {
  if (cfg.n < 2) throw InputError("experiments need n >= 2");
  if (cfg.trials < 1) throw InputError("experiments need at least one trial");
}

Budget trial_budget(const ExperimentConfig& cfg) {
  return cfg.budget_secs > 0 ? Budget::seconds(cfg.budget_secs) : Budget();
}

}  // namespace

TdminSummary run_tdmin_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);
  TdminSummary s;
  s.records.resize(static_cast<std::size_t>(cfg.trials));
  parallel_for(s.records.size(), cfg.jobs, [&](std::size_t i) {
    const int trial = static_cast<int>(i);
    TrialRecord& r = s.records[i];
    r.trial = trial;
    r.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial));
    r.n = cfg.n;
    ConceptClass k = class1(random_tournament(cfg.n, r.seed));
    Budget budget = trial_budget(cfg);
    r.td_min = td_min(k, budget);
    NctdResult nc = nctd(k, cfg.n, budget);
    if (nc.status != NctdStatus::exact) throw BudgetExceeded();
    r.nctd = nc.d;
    if (cfg.n <= kRtdTrialLimit) r.rtd = rtd(k, budget);
  });
  long long total = 0;
  s.min = s.records.front().td_min;
  s.max = s.min;
  for (const auto& r : s.records) {
    ++s.histogram[r.td_min];
    total += r.td_min;
    s.min = std::min(s.min, r.td_min);
    s.max = std::max(s.max, r.td_min);
    s.all_nctd_one = s.all_nctd_one && r.nctd == 1;
  }
  s.mean = static_cast<double>(total) / static_cast<double>(s.records.size());
  return s;
}

std::string tdmin_csv(const std::vector<TrialRecord>& records) {
  std::string out = "trial,seed,n,td_min,nctd\n";
  for (const auto& r : records)
    out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + std::to_string(r.n) + "," +
           std::to_string(r.td_min) + "," + std::to_string(r.nctd) + "\n";
  return out;
}

int pattern_count(const ConceptClass& k, const InstanceSet& s, const std::vector<bool>& b) {
  require_same_domain(k.domain_size(), s.size());
  if (static_cast<std::size_t>(s.count()) != b.size()) throw InputError("pattern length differs from |s|");
  std::vector<int> pos;
  s.for_each([&](int p) { pos.push_back(p); });
  int count = 0;
  for (const auto& c : k) {
    bool match = true;
    for (std::size_t i = 0; i < pos.size() && match; ++i) match = c.test(pos[i]) == b[i];
    count += match;
  }
  return count;
}

int pattern_count(const Tournament& g, const InstanceSet& s, const std::vector<bool>& b) {
  return pattern_count(class1(g), s, b);
}

namespace {

/// Calls f(histogram) for every size-subset s, histogram[b] = concepts showing pattern b on s.
template <class F>
void for_each_pattern_histogram(const ConceptClass& k, int size, F&& f) {
  const int n = k.domain_size();
  if (size < 0 || size > n) throw InputError("pattern size outside [0, n]");
  if (size > 20) throw InputError("pattern size too large to enumerate");
  std::vector<int> hist(std::size_t{1} << size);
  for_each_combination(n, size, [&](const std::vector<int>& pos) {
    std::fill(hist.begin(), hist.end(), 0);
    for (const auto& c : k) {
      std::size_t b = 0;
      for (std::size_t i = 0; i < pos.size(); ++i) b |= static_cast<std::size_t>(c.test(pos[i])) << i;
      ++hist[b];
    }
    f(static_cast<const std::vector<int>&>(hist));
  });
}

}  // namespace

bool some_pattern_unique(const ConceptClass& k, int size) {
  bool unique = false;
  for_each_pattern_histogram(k, size, [&](const std::vector<int>& h) {
    unique = unique || std::find(h.begin(), h.end(), 1) != h.end();
  });
  return unique;
}

int min_pattern_count(const ConceptClass& k, int size) {
  int best = static_cast<int>(k.size());
  for_each_pattern_histogram(k, size, [&](const std::vector<int>& h) {
    best = std::min(best, *std::min_element(h.begin(), h.end()));
  });
  return best;
}

std::vector<Concept> all_concepts(int n) {
  if (n < 1 || n > 20) throw InputError("all_concepts needs 1 <= n <= 20");
  std::vector<Concept> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    Concept c(n);
    for (int b = 0; b < n; ++b)
      if ((v >> b) & 1U) c.set(b);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string class_key(const ConceptClass& k) {
  std::vector<std::string> rows;
  for (const auto& c : k) rows.push_back(c.to_string());
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) key += r + ",";
  return key;
}

bool complement_closed(const ConceptClass& k) {
  return std::all_of(k.begin(), k.end(), [&](const Concept& c) { return k.contains(complement(c)); });
}

ConceptClass pick(int n, const std::vector<Concept>& pool, const std::vector<int>& idx) {
  ConceptClass k(n);
  for (int i : idx) k.add(pool[static_cast<std::size_t>(i)]);
  return k;
}

bool nctd_at_most(const ConceptClass& k, int d, Budget& budget) { return find_nc_teacher(k, d, budget).has_value(); }

std::vector<std::vector<int>> index_combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, k, [&](const std::vector<int>& c) { out.push_back(c); });
  return out;
}

}  // namespace

Dim1Report verify_dim1(int n, bool complement_filter, int jobs) {
  if (n < 1 || n > kDim1MaxN) throw InputError("verify dim1 supports 1 <= n <= " + std::to_string(kDim1MaxN));
  Dim1Report rep;
  rep.n = n;
  rep.complement_filter = complement_filter;
  const std::vector<Concept> pool = all_concepts(n);
  const int m = static_cast<int>(pool.size());

  auto run_level = [&](int size, std::uint64_t& candidates, std::uint64_t* decided) {
    auto combos = index_combinations(m, size);
    candidates = combos.size();
    std::vector<char> pass(combos.size(), 0), tried(combos.size(), 0);
    parallel_for(combos.size(), jobs, [&](std::size_t i) {
      ConceptClass k = pick(n, pool, combos[i]);
      if (complement_filter && !complement_closed(k)) return;
      tried[i] = 1;
      Budget unlimited;
      pass[i] = nctd_at_most(k, 1, unlimited);
    });
    if (decided) *decided = static_cast<std::uint64_t>(std::count(tried.begin(), tried.end(), 1));
    std::vector<ConceptClass> out;
    for (std::size_t i = 0; i < combos.size(); ++i)
      if (pass[i]) out.push_back(pick(n, pool, combos[i]));
    return out;
  };

  rep.passing = run_level(2 * n, rep.candidates, &rep.decided);
  std::uint64_t larger = 0;
  if (2 * n + 1 <= m) rep.larger_passing = run_level(2 * n + 1, larger, nullptr).size();
  rep.larger_candidates = larger;

  std::set<std::string> tour, found;
  const std::uint64_t count = std::uint64_t{1} << binomial(n, 2);
  for (std::uint64_t idx = 0; idx < count; ++idx) tour.insert(class_key(class2(tournament_from_index(n, idx))));
  for (const auto& k : rep.passing) found.insert(class_key(k));
  rep.tournament_classes = tour.size();
  rep.matches_tournaments = tour == found && found.size() == rep.passing.size();
  rep.all_complement_closed = std::all_of(rep.passing.begin(), rep.passing.end(), complement_closed);
  return rep;
}

std::string canonical_form(const ConceptClass& k) {
  const int n = k.domain_size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    ConceptClass image(n);
    for (const auto& c : k) {
      Concept d(n);
      c.for_each([&](int p) { d.set(perm[static_cast<std::size_t>(p)]); });
      image.add(d);
    }
    std::string key = class_key(image);
    if (first || key < best) best = key;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

MaxClassResult max_class_search(int n, int d, Budget& budget) {
  if (n < 1 || n > 6) throw InputError("max class search supports 1 <= n <= 6");
  if (d < 0 || d > n) throw InputError("max class search needs 0 <= d <= n");
  MaxClassResult res;
  res.n = n;
  res.d = d;
  const std::vector<Concept> pool = all_concepts(n);
  const auto m = static_cast<std::uint64_t>(pool.size());
  const BigInt ksz = ksz_bound(n, d);
  const std::uint64_t top = ksz < m ? ksz.convert_to<std::uint64_t>() : m;
  res.upper = top;

  res.greedy = ConceptClass(n);
  try {
    for (const auto& c : pool) {
      ConceptClass next = res.greedy;
      next.add(c);
      if (nctd_at_most(next, d, budget)) res.greedy = std::move(next);
    }
  } catch (const BudgetExceeded&) {
  }
  res.lower = res.greedy.size();

  for (std::uint64_t size = top; size >= std::max<std::uint64_t>(res.lower, 1); --size) {
    std::uint64_t count = 0;
    try {
      count = binomial(static_cast<long long>(m), static_cast<long long>(size));
    } catch (const std::overflow_error&) {
      return res;
    }
    if (res.candidates + count > kMaxClassCandidateLimit) return res;
    std::vector<ConceptClass> passing;
    try {
      for_each_combination(static_cast<int>(m), static_cast<int>(size), [&](const std::vector<int>& idx) {
        ConceptClass k = pick(n, pool, idx);
        ++res.candidates;
        if (nctd_at_most(k, d, budget)) passing.push_back(std::move(k));
      });
    } catch (const BudgetExceeded&) {
      return res;
    }
    if (!passing.empty()) {
      std::set<std::string> seen;
      for (auto& k : passing)
        if (seen.insert(canonical_form(k)).second) res.witnesses.push_back(std::move(k));
      res.exact = true;
      res.lower = res.upper = size;
      return res;
    }
    res.upper = size - 1;
  }
  res.exact = res.lower == res.upper;
  return res;
}

std::pair<double, double> wilson_interval(int hits, int trials) {
  if (trials <= 0) throw InputError("interval needs at least one trial");
  const double z = 1.959963984540054;
  const double nt = trials, p = hits / nt;
  const double denom = 1 + z * z / nt;
  const double centre = (p + z * z / (2 * nt)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
  // Exact endpoints at 0 and 1, where rounding would leave a tiny residue.
  return {hits == 0 ? 0.0 : std::max(0.0, centre - half), hits == trials ? 1.0 : std::min(1.0, centre + half)};
}

TauReport tau_estimate(const ExperimentConfig& cfg) {
  check_config(cfg);
  TauReport rep;
  rep.n = cfg.n;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  Threshold th = threshold_k(static_cast<std::uint64_t>(cfg.n), 5);
  rep.k_prime = th.k_prime;
  rep.k = th.k;
  if (cfg.k_override) {
    rep.overridden = true;
    rep.k = *cfg.k_override;
  }
  rep.vacuous = rep.k < 1;
  if (!rep.vacuous) {
    std::vector<char> hit(static_cast<std::size_t>(cfg.trials), 0);
    parallel_for(hit.size(), cfg.jobs, [&](std::size_t i) {
      ConceptClass k = trial_class1(cfg.n, cfg.seed, static_cast<int>(i));
      Budget budget = trial_budget(cfg);
      hit[i] = td_min(k, budget) <= rep.k;
    });
    rep.hits = static_cast<int>(std::count(hit.begin(), hit.end(), 1));
  }
  rep.fraction = static_cast<double>(rep.hits) / cfg.trials;
  std::tie(rep.ci_low, rep.ci_high) = wilson_interval(rep.hits, cfg.trials);
  return rep;
}

}  // namespace teachlab
