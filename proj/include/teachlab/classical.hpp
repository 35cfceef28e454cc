#pragma once

#include <vector>

#include "teachlab/budget.hpp"
#include "teachlab/concepts.hpp"

namespace teachlab {

/// A minimum teaching set for one concept.
struct TeachingSet {
  int size = 0;
  InstanceSet witness;
};

/// Minimum teaching-set size and witness for every concept, in class order.
struct TeachingReport {
  std::vector<TeachingSet> per_concept;

  int td_min() const;
  int td_max() const;
};

/// True iff s distinguishes c from every other concept of k.
bool is_teaching_set(const ConceptClass& k, const Concept& c, const InstanceSet& s);

/// Difference sets of c against every other concept of k (c must be in k).
std::vector<InstanceSet> competitor_differences(const ConceptClass& k, const Concept& c);

/// TD(c, k) with the lexicographically smallest minimum witness.
TeachingSet td_of(const ConceptClass& k, const Concept& c, Budget& budget);
TeachingSet td_of(const ConceptClass& k, const Concept& c);

TeachingReport teaching_report(const ConceptClass& k, int jobs = 1);

/// Minimum over concepts of TD(c, k), by iterative deepening on the size.
int td_min(const ConceptClass& k, Budget& budget);
int td_min(const ConceptClass& k);
int td_max(const ConceptClass& k);

/// Indices of the concepts with TD(c, k) = TD_min(k), plus that minimum.
struct EasiestConcepts {
  int td_min = 0;
  std::vector<std::size_t> indices;
};
EasiestConcepts easiest_concepts(const ConceptClass& k, Budget& budget);

/// One peeling step of the recursive teaching dimension.
struct RtdLayer {
  int td_min = 0;
  std::vector<Concept> concepts;
};

/// Peels easiest-to-teach concepts until the class is exhausted.
std::vector<RtdLayer> rtd_layers(const ConceptClass& k, Budget& budget);

/// Recursive teaching dimension; 0 for the empty class.
int rtd(const ConceptClass& k, Budget& budget);
int rtd(const ConceptClass& k);

/// Maximum of TD_min over all nonempty subclasses. Throws InputError when
/// |k| exceeds `cap`.
int rtd_bruteforce(const ConceptClass& k, std::size_t cap = 14);

}  // namespace teachlab
