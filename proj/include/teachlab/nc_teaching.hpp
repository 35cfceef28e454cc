#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "teachlab/budget.hpp"
#include "teachlab/concepts.hpp"

namespace teachlab {

/**
 * Assignment of one instance set to every concept of a class. Admissibility
 * (no clashes) is checked by is_nc_teacher, never assumed.
 */
struct NCTeacher {
  ConceptClass concepts;
  std::vector<InstanceSet> sets;  // sets[i] is assigned to concepts[i]

  /// Size of the largest assigned set.
  int order() const;
  bool normalized() const;
  const InstanceSet& set_for(const Concept& c) const;
};

/// Two distinct concepts clash iff they agree on s ∪ s2.
bool clash(const Concept& c, const Concept& c2, const InstanceSet& s, const InstanceSet& s2);

/// First clashing pair (by index), if any.
std::optional<std::pair<std::size_t, std::size_t>> find_clash(const NCTeacher& t);
bool is_nc_teacher(const NCTeacher& t);

/// Pads every set to exactly d instances with the smallest unused ones.
NCTeacher normalize_teacher(const NCTeacher& t, int d);

/// Smallest d with 2^d * C(n, d) >= class size.
int nctd_lower_bound(int n, std::size_t class_size);
int nctd_lower_bound(const ConceptClass& k);

/// Admissible teacher with all sets of size exactly d, or nullopt if none
/// exists. Throws BudgetExceeded when the budget runs out.
std::optional<NCTeacher> find_nc_teacher(const ConceptClass& k, int d, Budget& budget);

enum class NctdStatus { exact, exceeds_max, inconclusive };

struct NctdResult {
  NctdStatus status = NctdStatus::exact;
  int d = 0;            // exact value when status == exact
  int lower_bound = 0;  // every order below this was refuted (or ruled out by counting)
  int upper_bound = 0;  // smallest order known to be admissible
  std::optional<NCTeacher> teacher;
};

/// NCTD by deciding d = lower bound, lower bound + 1, ... up to d_max.
NctdResult nctd(const ConceptClass& k, int d_max, Budget& budget);
NctdResult nctd(const ConceptClass& k);

/// Teacher that gives every concept the whole domain.
NCTeacher full_domain_teacher(const ConceptClass& k);

// `n=<int> d=<int>` header, then `<bits> : i1 ... id` per concept.
std::string serialize_teacher(const NCTeacher& t);
/// Builds a teacher whose class is the concepts listed in the file.
NCTeacher parse_teacher(std::string_view text);
/// Parses and re-orders the teacher to follow k; every concept of k must appear once.
NCTeacher parse_teacher(std::string_view text, const ConceptClass& k);

}  // namespace teachlab
