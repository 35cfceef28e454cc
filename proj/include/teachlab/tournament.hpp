#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "teachlab/concepts.hpp"
#include "teachlab/nc_teaching.hpp"

namespace teachlab {

struct PairTag;

/**
 * Orientation of the complete graph on players 1..n. One bit per unordered
 * pair {i, j}, i < j, stored in lexicographic pair order: 1 means the edge
 * (i, j) is present (i beat j), 0 means (j, i).
 */
class Tournament {
 public:
  /// Every pair oriented from the larger to the smaller player.
  explicit Tournament(int n);

  int players() const { return n_; }

  /// True iff the edge (i, j) is present.
  bool has_edge(int i, int j) const;
  /// Makes (i, j) the edge between i and j.
  void orient(int i, int j);

  /// Lexicographic rank of the pair {i, j}, i < j, among all pairs.
  std::uint64_t pair_rank(int i, int j) const;
  std::uint64_t pair_count() const;
  const BasicBitSet<PairTag>& orientation() const { return bits_; }

  /// Directed edges in pair order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  int n_;
  BasicBitSet<PairTag> bits_;
};

/// Edges (i, j) for all i < j.
Tournament linear_tournament(int n);

/// Pair of rank r gets edge (i, j) iff the top bit of splitmix_at(seed, r) is set.
Tournament random_tournament(int n, std::uint64_t seed);

/// Tournament number `index` in [0, 2^C(n,2)): bit r of index orients the pair of rank r.
Tournament tournament_from_index(int n, std::uint64_t index);

/// C_j: players that beat j.
Concept beaten_by(const Tournament& g, int j);

/// {complement(C_1), ..., complement(C_n)}.
ConceptClass class1(const Tournament& g);
/// {C_1, ..., C_n, complement(C_1), ..., complement(C_n)}.
ConceptClass class2(const Tournament& g);

/// Order-1 teacher on class2(g) assigning {j} to C_j and complement(C_j).
NCTeacher canonical_teacher(const Tournament& g);

/// Why recover_tournament rejected its input.
enum class RecoveryFailure {
  wrong_size,
  teacher_mismatch,
  not_order_one,
  not_admissible,
  singleton_not_shared_by_two,
  singleton_pair_agrees,
  not_a_tournament,
  class_mismatch,
};

class RecoveryError : public InputError {
 public:
  RecoveryError(RecoveryFailure kind, const std::string& what) : InputError(what), kind_(kind) {}
  RecoveryFailure kind() const { return kind_; }

 private:
  RecoveryFailure kind_;
};

/// Tournament G with class2(G) = k, read off an admissible order-1 teacher.
Tournament recover_tournament(const ConceptClass& k, const NCTeacher& t);

// `n=<int>` then one `i j` line per directed edge, in pair order.
std::string serialize_tournament(const Tournament& g);
Tournament parse_tournament(std::string_view text);

}  // namespace teachlab
