#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "teachlab/budget.hpp"
#include "teachlab/concepts.hpp"
#include "teachlab/tournament.hpp"

namespace teachlab {

struct Threshold {
  double k_prime = 0;
  long long k = 0;  // floor(k_prime), may be negative
};

/// k' = log2(n) - 2 log2(log2(2n)) - offset, k = floor(k'). offset is 4 for
/// the existence statement and 5 for the fraction-of-tournaments statement.
Threshold threshold_k(std::uint64_t n, int offset = 4);

/// Both inequalities at one n, plus the fraction-of-tournaments variant.
struct ClaimPoint {
  std::uint64_t n = 0;
  long long k = 0;
  bool applicable = false;  // k >= 1
  bool ineq1 = false;       // 2^-(k+1) (n-k) >= 2
  bool ineq2 = false;       // C(n,k) 2^k exp(-2^-(k+3) (n-k)) < 1
  bool sufficient = false;  // k log2(2n) - 2^-(k+4) n < 0
  long long k5 = 0;
  bool applicable5 = false;
  bool ineq1_5 = false;      // 2^-(k+2) n >= 2
  bool ineq2_5 = false;      // C(n,k) 2^k exp(-2^-(k+4) n) < (2n)^-log2(2n)
  bool sufficient5 = false;  // k log2(2n) - 2^-(k+4) n < -log2(2n)^2
};

ClaimPoint claim_check(std::uint64_t n);

struct ClaimScan {
  std::uint64_t scan_max = 0;
  std::size_t points = 0;
  std::optional<std::uint64_t> n0;   // smallest scanned n from which every scanned point satisfies both
  std::optional<std::uint64_t> n0_5;  // same for the k' - 5 variant
  std::uint64_t implication_checks = 0;
  std::uint64_t implication_failures = 0;  // sufficient condition held but ineq2 did not
  std::uint64_t implication_failures_5 = 0;
  std::optional<ClaimPoint> last;
};

/// Scans every n in [2, min(scan_max, 2^16)] and then 64 points per doubling up to scan_max.
ClaimScan claim_scan(std::uint64_t scan_max);
std::vector<std::uint64_t> claim_grid(std::uint64_t scan_max);

struct ExperimentConfig {
  int n = 0;
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<int> k_override;
  double budget_secs = 0;  // per trial; 0 = unlimited
  int jobs = 1;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int td_min = 0;
  int nctd = 0;
  std::optional<int> rtd;  // only for n <= kRtdTrialLimit
};

inline constexpr int kRtdTrialLimit = 12;

struct TdminSummary {
  std::vector<TrialRecord> records;
  std::map<int, int> histogram;  // td_min -> trials
  int min = 0, max = 0;
  double mean = 0;
  bool all_nctd_one = true;
};

/// Random tournament per trial (seed derive_seed(cfg.seed, trial)), its
/// first class, and td_min / nctd of that class. Throws BudgetExceeded.
TdminSummary run_tdmin_experiment(const ExperimentConfig& cfg);

/// Header `trial,seed,n,td_min,nctd`, one row per record.
std::string tdmin_csv(const std::vector<TrialRecord>& records);

/// Concepts of k agreeing with pattern b (b[i] labels the i-th smallest instance of s).
int pattern_count(const ConceptClass& k, const InstanceSet& s, const std::vector<bool>& b);
int pattern_count(const Tournament& g, const InstanceSet& s, const std::vector<bool>& b);

/// Over all s with |s| = size and all patterns b: does some pattern match
/// exactly one concept? Holds iff td_min(k) <= size (for size <= n).
bool some_pattern_unique(const ConceptClass& k, int size);
/// Smallest number of concepts matching any (s, b) with |s| = size. At least 2
/// implies td_min(k) > size; the converse fails when some pattern matches nothing.
int min_pattern_count(const ConceptClass& k, int size);

struct Dim1Report {
  int n = 0;
  bool complement_filter = false;
  std::uint64_t candidates = 0;  // classes of size 2n
  std::uint64_t decided = 0;     // classes that reached the nctd decision
  std::vector<ConceptClass> passing;
  std::size_t tournament_classes = 0;  // distinct class2(G)
  bool matches_tournaments = false;
  bool all_complement_closed = false;
  std::uint64_t larger_candidates = 0;  // classes of size 2n + 1
  std::uint64_t larger_passing = 0;
  bool ok() const { return matches_tournaments && all_complement_closed && larger_passing == 0; }
};

inline constexpr int kDim1MaxN = 4;

/// Enumerates every class of size 2n (and 2n + 1) over [n], n <= 4, and
/// compares the NCTD-1 ones with the second classes of all tournaments.
Dim1Report verify_dim1(int n, bool complement_filter = false, int jobs = 1);

/// Canonical form under permutations of the domain: the least sorted list of
/// concept strings over all relabelings.
std::string canonical_form(const ConceptClass& k);

struct MaxClassResult {
  int n = 0, d = 0;
  bool exact = false;
  std::uint64_t lower = 0, upper = 0;
  std::vector<ConceptClass> witnesses;  // one per domain-permutation orbit, exact only
  ConceptClass greedy;                  // class reaching the greedy lower bound
  std::uint64_t candidates = 0;
};

inline constexpr std::uint64_t kMaxClassCandidateLimit = 2'000'000;

/// Largest class over [n] with NCTD <= d, by refuting sizes top-down from
/// min(2^d C(n,d), 2^n). Budget or candidate-count exhaustion gives an interval.
MaxClassResult max_class_search(int n, int d, Budget& budget);

/// Concepts of [n] in the order the exhaustive searches use (integer value, bit i = instance i+1).
std::vector<Concept> all_concepts(int n);

/// First class of a random tournament for trial `trial` of an experiment.
ConceptClass trial_class1(int n, std::uint64_t master_seed, int trial);

struct TauReport {
  int n = 0, trials = 0;
  std::uint64_t seed = 0;
  double k_prime = 0;
  long long k = 0;
  bool overridden = false;
  bool vacuous = false;  // k < 1: no class of n >= 2 concepts has td_min <= k
  int hits = 0;
  double fraction = 0, ci_low = 0, ci_high = 0;
};

/// Fraction of sampled tournaments with td_min(class1) <= k, k from
/// threshold_k(n, 5) unless overridden, with a 95% Wilson interval.
TauReport tau_estimate(const ExperimentConfig& cfg);

/// 95% Wilson score interval for hits / trials.
std::pair<double, double> wilson_interval(int hits, int trials);

}  // namespace teachlab
