#include "teachlab/classical.hpp"

#include <algorithm>

#include "teachlab/hitting_set.hpp"
#include "teachlab/parallel.hpp"

namespace teachlab {

int TeachingReport::td_min() const {
  if (per_concept.empty()) throw InputError("TD_min of an empty class");
  return std::min_element(per_concept.begin(), per_concept.end(),
                          [](const TeachingSet& a, const TeachingSet& b) { return a.size < b.size; })
      ->size;
}

int TeachingReport::td_max() const {
  if (per_concept.empty()) throw InputError("TD of an empty class");
  return std::max_element(per_concept.begin(), per_concept.end(),
                          [](const TeachingSet& a, const TeachingSet& b) { return a.size < b.size; })
      ->size;
}

std::vector<InstanceSet> competitor_differences(const ConceptClass& k, const Concept& c) {
  if (!k.contains(c)) throw InputError("concept " + c.to_string() + " is not in the class");
  std::vector<InstanceSet> diffs;
  diffs.reserve(k.size());
  for (const auto& other : k)
    if (!(other == c)) diffs.push_back(difference_set(c, other));
  return diffs;
}

bool is_teaching_set(const ConceptClass& k, const Concept& c, const InstanceSet& s) {
  require_same_domain(k.domain_size(), s.size());
  if (!k.contains(c)) throw InputError("concept " + c.to_string() + " is not in the class");
  for (const auto& other : k) {
    if (other == c) continue;
    if (agrees_on(c, other, s)) return false;
  }
  return true;
}

TeachingSet td_of(const ConceptClass& k, const Concept& c, Budget& budget) {
  HittingSetSolver solver(k.domain_size(), competitor_differences(k, c));
  InstanceSet witness = solver.minimum(budget);
  return {witness.count(), witness};
}

TeachingSet td_of(const ConceptClass& k, const Concept& c) {
  Budget unlimited;
  return td_of(k, c, unlimited);
}

TeachingReport teaching_report(const ConceptClass& k, int jobs) {
  TeachingReport report;
  report.per_concept.resize(k.size());
  parallel_for(k.size(), jobs, [&](std::size_t i) { report.per_concept[i] = td_of(k, k[i]); });
  return report;
}

EasiestConcepts easiest_concepts(const ConceptClass& k, Budget& budget) {
  if (k.empty()) throw InputError("TD_min of an empty class");
  std::vector<HittingSetSolver> solvers;
  solvers.reserve(k.size());
  for (const auto& c : k) solvers.emplace_back(k.domain_size(), competitor_differences(k, c));
  EasiestConcepts out;
  for (int s = 0; s <= k.domain_size(); ++s) {
    for (std::size_t i = 0; i < solvers.size(); ++i)
      if (solvers[i].exists_within(s, budget)) out.indices.push_back(i);
    if (!out.indices.empty()) {
      out.td_min = s;
      return out;
    }
  }
  throw std::logic_error("no teaching set within the full domain");
}

int td_min(const ConceptClass& k, Budget& budget) {
  if (k.empty()) throw InputError("TD_min of an empty class");
  std::vector<HittingSetSolver> solvers;
  solvers.reserve(k.size());
  for (const auto& c : k) solvers.emplace_back(k.domain_size(), competitor_differences(k, c));
  for (int s = 0; s <= k.domain_size(); ++s)
    for (const auto& solver : solvers)
      if (solver.exists_within(s, budget)) return s;
  throw std::logic_error("no teaching set within the full domain");
}

int td_min(const ConceptClass& k) {
  Budget unlimited;
  return td_min(k, unlimited);
}

int td_max(const ConceptClass& k) {
  if (k.empty()) throw InputError("TD of an empty class");
  int best = 0;
  Budget unlimited;
  for (const auto& c : k) {
    HittingSetSolver solver(k.domain_size(), competitor_differences(k, c));
    best = std::max(best, solver.minimum_size(unlimited));
  }
  return best;
}

std::vector<RtdLayer> rtd_layers(const ConceptClass& k, Budget& budget) {
  std::vector<RtdLayer> layers;
  ConceptClass rest = k;
  while (!rest.empty()) {
    EasiestConcepts easiest = easiest_concepts(rest, budget);
    RtdLayer layer;
    layer.td_min = easiest.td_min;
    std::vector<std::size_t> keep;
    std::size_t next = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (next < easiest.indices.size() && easiest.indices[next] == i) {
        layer.concepts.push_back(rest[i]);
        ++next;
      } else {
        keep.push_back(i);
      }
    }
    layers.push_back(std::move(layer));
    rest = keep.empty() ? ConceptClass(k.domain_size()) : rest.subclass(keep);
  }
  return layers;
}

int rtd(const ConceptClass& k, Budget& budget) {
  int best = 0;
  for (const auto& layer : rtd_layers(k, budget)) best = std::max(best, layer.td_min);
  return best;
}

int rtd(const ConceptClass& k) {
  Budget unlimited;
  return rtd(k, unlimited);
}

int rtd_bruteforce(const ConceptClass& k, std::size_t cap) {
  if (k.size() > cap)
    throw InputError("class of size " + std::to_string(k.size()) + " exceeds the brute-force cap " +
                     std::to_string(cap));
  if (k.empty()) return 0;
  const std::size_t m = k.size();
  int best = 0;
  std::vector<std::size_t> members;
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    members.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1UL) members.push_back(i);
    best = std::max(best, td_min(k.subclass(members)));
  }
  return best;
}

}  // namespace teachlab
