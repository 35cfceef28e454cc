#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "teachlab/budget.hpp"
#include "teachlab/concepts.hpp"
#include "teachlab/rational.hpp"

namespace teachlab {

/// Family of distinct k-subsets of [n]: a vertex set of the Johnson graph J(n, k).
class KSetFamily {
 public:
  KSetFamily(int n, int k);
  /// Throws InputError on a wrong size, a duplicate, or a domain mismatch.
  KSetFamily(int n, int k, std::vector<InstanceSet> members);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<InstanceSet>& members() const { return members_; }
  bool contains(const InstanceSet& s) const;
  void add(const InstanceSet& s);

  /// Members sorted into colex order.
  KSetFamily sorted() const;

  friend bool operator==(const KSetFamily& a, const KSetFamily& b);

 private:
  int n_, k_;
  std::vector<InstanceSet> members_;
  std::unordered_set<InstanceSet, BitSetHash> index_;
};

/// |a ∩ b| = k - 1 for two k-subsets.
bool johnson_adjacent(const InstanceSet& a, const InstanceSet& b);

enum class CliqueClass { wide, narrow, both, neither };
const char* to_string(CliqueClass c);

/// Classifies a clique by its common intersection (wide) and union (narrow).
/// Throws InputError if the sets are not pairwise adjacent.
CliqueClass classify_clique(const std::vector<InstanceSet>& clique);

/// One maximal narrow clique P_k(D) per (k+1)-subset D, D in lexicographic order.
std::vector<KSetFamily> narrow_cliques(int n, int k);

/// True iff some (k+1)-subset contains more than t members, i.e. the family
/// spans a narrow (t+1)-clique.
bool has_narrow_clique(const KSetFamily& f, int t);

/// Members avoiding instance i, relabelled onto [n-1] (instances above i shift down by one).
KSetFamily restrict_family(const KSetFamily& f, Instance i);

/// Replaces every member A by [n] \ A; a family in J(n, n-k).
KSetFamily complement_family(const KSetFamily& f);

/// An instance occurring in the fewest members (smallest such instance).
Instance least_frequent_instance(const KSetFamily& f);
int occurrences(const KSetFamily& f, Instance i);

/// Upper bounds the branch-and-bound may use.
enum class HMaxPruning {
  trivial,   // size plus remaining insertable sets
  counting,  // per-(k+1)-subset double counting
  chain,     // counting, plus floor(n * H(n-1) / (n-k)) from the exact smaller instance
};

struct HMaxOptions {
  HMaxPruning pruning = HMaxPruning::counting;
  std::uint64_t size_cap = 1000;  // exact search only when C(n, k) <= size_cap
};

struct HMaxResult {
  bool exact = false;
  std::uint64_t value = 0;  // H when exact, best lower bound otherwise
  std::uint64_t upper = 0;  // proven upper bound
  KSetFamily witness{1, 1};
  std::uint64_t nodes = 0;
};

/// Largest family of k-subsets of [n] in which every (k+1)-subset contains at
/// most t members. The witness is the colex-least maximum family.
HMaxResult h_max(int n, int k, int t, Budget& budget, const HMaxOptions& options = {});
HMaxResult h_max(int n, int k, int t);

/// H / C(n, k); requires an exact result.
Rational h_ratio(int n, int k, const HMaxResult& result);
Rational h_ratio(int n, int k, int t);

/// Greedy family: lexicographic order, keep each set that fits. Returned in colex order.
KSetFamily greedy_family(int n, int k, int t);

// One member per line, `i1 i2 ... ik`.
std::string serialize_family(const KSetFamily& f);
KSetFamily parse_family(std::string_view text, int n, int k);

}  // namespace teachlab
