#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "teachlab/classical.hpp"
#include "teachlab/hitting_set.hpp"

using namespace teachlab;
using namespace testing;

namespace {

ConceptClass half_intervals3() { return parse_class("n=3\n000\n100\n110\n111\n011\n001\n"); }

/// Lexicographically smallest (ascending instance list) minimum hitting set, by enumeration.
std::vector<Instance> brute_lex_min_hitting(int n, const std::vector<InstanceSet>& sets) {
  std::vector<Instance> best;
  int best_size = n + 1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    InstanceSet s = set_of(n, m);
    if (s.count() > best_size) continue;
    if (!std::all_of(sets.begin(), sets.end(), [&](const InstanceSet& x) { return x.intersects(s); })) continue;
    auto inst = s.instances();
    if (s.count() < best_size || inst < best) {
      best_size = s.count();
      best = inst;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("hitting sets match enumeration, including the lexicographic witness") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int n = uniform_int(rng, 1, 10);
    int m = uniform_int(rng, 0, 12);
    std::vector<InstanceSet> sets;
    for (int i = 0; i < m; ++i) {
      InstanceSet s = set_of(n, rng() & ((1ULL << n) - 1));
      if (s.none()) s.set(uniform_int(rng, 0, n - 1));
      sets.push_back(s);
    }
    HittingSetSolver solver(n, sets);
    Budget b;
    auto expect = brute_lex_min_hitting(n, sets);
    CHECK(solver.minimum_size(b) == static_cast<int>(expect.size()));
    InstanceSet got = solver.minimum(b);
    CHECK(got.instances() == expect);
    CHECK(solver.is_hitting_set(got));
    CHECK(solver.exists_within(static_cast<int>(expect.size()), b));
    if (!expect.empty()) CHECK_FALSE(solver.exists_within(static_cast<int>(expect.size()) - 1, b));
  }
}

TEST_CASE("hitting set rejects an empty member") {
  CHECK_THROWS_AS(HittingSetSolver(3, {InstanceSet(3)}), InputError);
}

TEST_CASE("teaching sets on the half-interval class") {
  ConceptClass k = half_intervals3();
  Concept all = Concept::from_string("111");
  CHECK(is_teaching_set(k, all, InstanceSet::from_instances(3, {1, 3})));
  CHECK_FALSE(is_teaching_set(k, all, InstanceSet::from_instances(3, {1})));
  for (const auto& c : k) CHECK(is_teaching_set(k, c, InstanceSet::full(3)));
  TeachingSet ts = td_of(k, all);
  CHECK(ts.size == 2);
  CHECK(ts.witness == InstanceSet::from_instances(3, {1, 3}));
  CHECK(td_min(k) == 2);
  CHECK_THROWS_AS(td_of(k, Concept::from_string("101")), InputError);
  CHECK_THROWS_AS(is_teaching_set(k, Concept::from_string("101"), InstanceSet(3)), InputError);
}

TEST_CASE("small hand-checked classes") {
  ConceptClass single = parse_class("n=3\n101\n");
  CHECK(td_of(single, single[0]).size == 0);
  CHECK(td_of(single, single[0]).witness.none());
  CHECK(is_teaching_set(single, single[0], InstanceSet(3)));
  CHECK(td_min(single) == 0);
  CHECK(td_max(single) == 0);
  CHECK(rtd(single) == 0);
  CHECK(rtd_bruteforce(single) == 0);

  ConceptClass chain = parse_class("n=2\n00\n10\n11\n");
  CHECK(td_of(chain, Concept::from_string("10")).size == 2);
  CHECK(rtd(chain) == rtd_bruteforce(chain));
  CHECK(rtd(chain) == 1);

  for (int n : {1, 3, 7}) {
    ConceptClass pair(n);
    pair.add(Concept(n));
    pair.add(Concept::full(n));
    CHECK(td_min(pair) == 1);
    CHECK(rtd(pair) == 1);
  }
  ConceptClass k = half_intervals3();
  CHECK(rtd(k) == rtd_bruteforce(k));
  CHECK_THROWS_AS(td_min(ConceptClass(3)), InputError);
  CHECK(rtd(ConceptClass(3)) == 0);
}

TEST_CASE("teaching dimensions agree with subset enumeration") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = uniform_int(rng, 1, 7);
    std::size_t size = static_cast<std::size_t>(uniform_int(rng, 1, 20));
    ConceptClass k = random_class(rng, n, size);
    TeachingReport rep = teaching_report(k);
    for (std::size_t i = 0; i < k.size(); ++i) {
      const TeachingSet& ts = rep.per_concept[i];
      CHECK(ts.size == brute_td(k, k[i]));
      CHECK(ts.witness.count() == ts.size);
      CHECK(is_teaching_set(k, k[i], ts.witness));
      // No smaller subset of the witness teaches.
      ts.witness.for_each([&](int p) {
        InstanceSet smaller = ts.witness;
        smaller.reset(p);
        CHECK_FALSE(is_teaching_set(k, k[i], smaller));
      });
    }
    CHECK(td_min(k) == brute_td_min(k));
    CHECK(rep.td_min() == td_min(k));
    CHECK(rep.td_max() == td_max(k));
  }
}

TEST_CASE("teaching reports do not depend on the worker count") {
  SplitMix64 rng(12);
  ConceptClass k = random_class(rng, 12, 60);
  TeachingReport a = teaching_report(k, 1), b = teaching_report(k, 4);
  for (std::size_t i = 0; i < k.size(); ++i) {
    CHECK(a.per_concept[i].size == b.per_concept[i].size);
    CHECK(a.per_concept[i].witness == b.per_concept[i].witness);
  }
}

TEST_CASE("recursive teaching dimension: peeling equals subclass maximum and sits between td_min and td_max") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 250; ++trial) {
    int n = uniform_int(rng, 1, 6);
    std::size_t size = static_cast<std::size_t>(uniform_int(rng, 1, 12));
    ConceptClass k = random_class(rng, n, size);
    int r = rtd(k);
    CHECK(r == rtd_bruteforce(k));
    CHECK(td_min(k) <= r);
    CHECK(r <= td_max(k));
    CHECK(r <= static_cast<int>(std::ceil(std::log2(static_cast<double>(k.size())))));
  }
}

TEST_CASE("peeling layers partition the class") {
  SplitMix64 rng(14);
  ConceptClass k = random_class(rng, 6, 30);
  Budget b;
  auto layers = rtd_layers(k, b);
  std::size_t total = 0;
  for (const auto& l : layers) total += l.concepts.size();
  CHECK(total == k.size());
  CHECK_THROWS_AS(rtd_bruteforce(random_class(rng, 5, 15)), InputError);
}

TEST_CASE("budgets stop long searches") {
  SplitMix64 rng(15);
  ConceptClass k = random_class(rng, 40, 300);
  Budget tiny = Budget::nodes(3);
  CHECK_THROWS_AS(td_min(k, tiny), BudgetExceeded);
}
