#pragma once

#include <optional>
#include <vector>

#include "teachlab/budget.hpp"
#include "teachlab/concepts.hpp"

namespace teachlab {

struct SetIndexTag;
/// Bit vector indexed by set number inside a hitting-set instance.
using SetMask = BasicBitSet<SetIndexTag>;

/**
 * Exact minimum hitting set over a family of instance sets.
 *
 * The family is reduced once (duplicates and supersets dropped, which keeps
 * the set of hitting sets unchanged). Sizes are decided by branch-and-bound:
 * branch on the unhit set with fewest usable elements, prune with a greedy
 * packing of pairwise disjoint unhit sets. Witnesses are the lexicographically
 * smallest (as ascending instance lists) among all minimum hitting sets.
 */
class HittingSetSolver {
 public:
  /// Throws InputError if some set is empty (nothing can hit it).
  HittingSetSolver(int universe, const std::vector<InstanceSet>& sets);

  int universe() const { return n_; }
  std::size_t reduced_size() const { return sets_.size(); }

  /// Minimum cardinality of a hitting set.
  int minimum_size(Budget& budget) const;

  /// True iff some hitting set has at most `limit` elements.
  bool exists_within(int limit, Budget& budget) const;

  /// Lexicographically smallest hitting set of `size` elements in which each
  /// element hits a set missed by the smaller ones. At the minimum size this
  /// ranges over all minimum hitting sets.
  std::optional<InstanceSet> lex_first(int size, Budget& budget) const;

  /// Minimum hitting set, lexicographically smallest among the minimum ones.
  InstanceSet minimum(Budget& budget) const;

  bool is_hitting_set(const InstanceSet& s) const;

 private:
  int greedy_upper_bound() const;
  int packing_bound(const SetMask& unhit, const InstanceSet& allowed) const;
  void branch(SetMask& unhit, InstanceSet allowed, int chosen, int& best, bool stop_at_first, bool& found,
              Budget& budget) const;
  bool lex_search(int from, const SetMask& unhit, int remaining, std::vector<int>& chosen, Budget& budget) const;

  int n_;
  std::vector<InstanceSet> sets_;  // reduced, ascending cardinality
  std::vector<SetMask> cover_;     // cover_[pos] = sets containing position pos
};

}  // namespace teachlab
