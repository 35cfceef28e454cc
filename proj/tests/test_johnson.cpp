#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "teachlab/combinatorics.hpp"
#include "teachlab/johnson.hpp"

using namespace teachlab;
using namespace testing;

namespace {

InstanceSet S(int n, std::initializer_list<Instance> xs) { return InstanceSet::from_instances(n, xs); }

KSetFamily random_family(SplitMix64& rng, int n, int k, double keep) {
  KSetFamily f(n, k);
  for (const auto& s : k_subsets_lex(n, k))
    if (rng.uniform() < keep) f.add(s);
  return f;
}

}  // namespace

TEST_CASE("johnson adjacency and clique shapes") {
  CHECK(johnson_adjacent(S(4, {1, 2}), S(4, {1, 3})));
  CHECK_FALSE(johnson_adjacent(S(4, {1, 2}), S(4, {3, 4})));
  CHECK_FALSE(johnson_adjacent(S(4, {1, 2}), S(4, {1, 2})));

  CHECK(classify_clique({S(5, {1, 2}), S(5, {1, 3}), S(5, {1, 4})}) == CliqueClass::wide);
  CHECK(classify_clique({S(5, {1, 2}), S(5, {1, 3}), S(5, {2, 3})}) == CliqueClass::narrow);
  CHECK(classify_clique({S(5, {1, 2}), S(5, {1, 3})}) == CliqueClass::both);
  CHECK(classify_clique({S(5, {1, 2})}) == CliqueClass::neither);
  CHECK(classify_clique({}) == CliqueClass::neither);
  CHECK_THROWS_AS(classify_clique({S(5, {1, 2}), S(5, {3, 4})}), InputError);
  CHECK(std::string(to_string(CliqueClass::narrow)) == "narrow");
}

TEST_CASE("every clique of three or more sets is wide or narrow, never both") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      auto sets = k_subsets_lex(n, k);
      for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
          if (!johnson_adjacent(sets[a], sets[b])) continue;
          for (std::size_t c = b + 1; c < sets.size(); ++c) {
            if (!johnson_adjacent(sets[a], sets[c]) || !johnson_adjacent(sets[b], sets[c])) continue;
            CliqueClass cls = classify_clique({sets[a], sets[b], sets[c]});
            CHECK((cls == CliqueClass::wide || cls == CliqueClass::narrow));
          }
        }
    }
}

TEST_CASE("narrow cliques are the k-subsets of each (k+1)-subset") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      auto cliques = narrow_cliques(n, k);
      CHECK(cliques.size() == binomial(n, k + 1));
      for (const auto& q : cliques) {
        CHECK(q.size() == static_cast<std::size_t>(k + 1));
        if (k + 1 >= 3) CHECK(classify_clique(q.members()) == CliqueClass::narrow);
      }
    }
}

TEST_CASE("has_narrow_clique agrees with direct counting") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = uniform_int(rng, 3, 8);
    int k = uniform_int(rng, 1, n - 1);
    KSetFamily f = random_family(rng, n, k, rng.uniform());
    int worst = max_members_in_superset(f);
    for (int t = 1; t <= k + 1; ++t) CHECK(has_narrow_clique(f, t) == (worst > t));
  }
}

TEST_CASE("family construction errors") {
  KSetFamily f(4, 2);
  f.add(S(4, {1, 2}));
  CHECK_THROWS_AS(f.add(S(4, {1, 2})), InputError);
  CHECK_THROWS_AS(f.add(S(4, {1})), InputError);
  CHECK_THROWS_AS(f.add(S(5, {1, 2})), InputError);
  CHECK(f.contains(S(4, {1, 2})));
  CHECK_FALSE(f.contains(S(4, {1, 3})));
}

TEST_CASE("extremal values match exhaustive search") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      if (binomial(n, k) > 20) continue;
      for (int t = 1; t <= k; ++t) {
        int expect = brute_h_max(n, k, t);
        for (auto mode : {HMaxPruning::trivial, HMaxPruning::counting, HMaxPruning::chain}) {
          Budget b;
          HMaxResult r = h_max(n, k, t, b, {mode, 1000});
          REQUIRE(r.exact);
          CHECK(r.value == static_cast<std::uint64_t>(expect));
          CHECK(r.witness.size() == r.value);
          CHECK_FALSE(has_narrow_clique(r.witness, t));
        }
      }
    }
}

TEST_CASE("boundary values") {
  for (int k = 1; k <= 6; ++k)
    for (int t = 1; t <= k; ++t) {
      CHECK(h_max(k, k, t).value == 1);
      HMaxResult r = h_max(k + 1, k, t);
      CHECK(r.exact);
      CHECK(r.value == static_cast<std::uint64_t>(t));
    }
  CHECK_THROWS_AS(h_max(4, 2, 3), InputError);
  CHECK_THROWS_AS(h_max(4, 2, 0), InputError);
  CHECK_THROWS_AS(h_max(3, 4, 1), InputError);
}

TEST_CASE("two-sets with t = 2 are triangle-free graphs") {
  for (int n = 3; n <= 7; ++n) {
    HMaxResult r = h_max(n, 2, 2);
    REQUIRE(r.exact);
    CHECK(r.value == static_cast<std::uint64_t>(brute_triangle_free_edges(n)));
    CHECK(r.value == static_cast<std::uint64_t>(n * n / 4));
  }
  CHECK(h_ratio(4, 2, 2) == Rational(2, 3));
  CHECK(h_ratio(6, 2, 2) == Rational(3, 5));
}

TEST_CASE("density never increases with n and stays at most t/(k+1)") {
  for (int k = 2; k <= 3; ++k)
    for (int t = 1; t <= k; ++t) {
      Rational prev = 1;
      for (int n = k + 1; n <= 8; ++n) {
        Budget b = Budget::seconds(5);
        HMaxResult r = h_max(n, k, t, b, {HMaxPruning::counting, 1000});
        if (!r.exact) break;
        Rational h = h_ratio(n, k, r);
        CHECK(h <= prev);
        CHECK(h <= Rational(t, k + 1));
        prev = h;
      }
    }
}

TEST_CASE("witness is canonical and independent of the pruning mode") {
  for (auto [n, k, t] : std::vector<std::tuple<int, int, int>>{{5, 2, 2}, {6, 3, 2}, {6, 2, 1}, {7, 3, 3}}) {
    Budget b1, b2;
    HMaxResult a = h_max(n, k, t, b1, {HMaxPruning::trivial, 1000});
    HMaxResult c = h_max(n, k, t, b2, {HMaxPruning::counting, 1000});
    REQUIRE(a.exact);
    REQUIRE(c.exact);
    CHECK(a.value == c.value);
    CHECK(a.witness == c.witness);
    CHECK(a.witness.members() == a.witness.sorted().members());
  }
}

TEST_CASE("size cap gives an inexact answer with a valid witness") {
  Budget b;
  HMaxResult r = h_max(30, 3, 2, b, {HMaxPruning::counting, 1000});
  CHECK_FALSE(r.exact);
  CHECK(r.witness.size() == r.value);
  CHECK(r.value <= r.upper);
  CHECK_FALSE(has_narrow_clique(r.witness, 2));
  CHECK_THROWS_AS(h_ratio(30, 3, r), InputError);
}

TEST_CASE("greedy families are valid and no larger than the optimum") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      for (int t = 1; t <= k; ++t) {
        KSetFamily g = greedy_family(n, k, t);
        CHECK_FALSE(has_narrow_clique(g, t));
        if (binomial(n, k) <= 20) CHECK(g.size() <= static_cast<std::size_t>(brute_h_max(n, k, t)));
      }
}

TEST_CASE("restriction and complement") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    int n = uniform_int(rng, 3, 8);
    int k = uniform_int(rng, 1, n - 1);
    KSetFamily f = random_family(rng, n, k, 0.5);
    int t = std::max(1, max_members_in_superset(f));
    if (t > k) continue;

    Instance i = uniform_int(rng, 1, n);
    KSetFamily r = restrict_family(f, i);
    CHECK(r.n() == n - 1);
    CHECK(r.size() == f.size() - static_cast<std::size_t>(occurrences(f, i)));
    CHECK_FALSE(has_narrow_clique(r, t));

    // Some instance lies in at most k|F|/n members.
    Instance low = least_frequent_instance(f);
    CHECK(static_cast<std::uint64_t>(occurrences(f, low)) * static_cast<std::uint64_t>(n) <=
          static_cast<std::uint64_t>(k) * f.size());

    KSetFamily c = complement_family(f);
    CHECK(c.k() == n - k);
    CHECK(c.size() == f.size());
    CHECK(complement_family(c) == f);
  }
  KSetFamily full(3, 3, {InstanceSet::full(3)});
  CHECK_THROWS_AS(complement_family(full), InputError);
}

TEST_CASE("restriction relabels the instances above the removed one") {
  KSetFamily f(5, 2, {S(5, {1, 2}), S(5, {2, 5}), S(5, {3, 4})});
  KSetFamily r = restrict_family(f, 2);
  CHECK(r == KSetFamily(4, 2, {S(4, {2, 3})}));
}

TEST_CASE("family files") {
  KSetFamily f = h_max(6, 3, 2).witness;
  std::string text = serialize_family(f);
  KSetFamily back = parse_family(text, 6, 3);
  CHECK(back == f);
  CHECK(serialize_family(back) == text);
  CHECK(serialize_family(KSetFamily(4, 2, {S(4, {1, 2}), S(4, {3, 4})})) == "1 2\n3 4\n");
  CHECK_THROWS_AS(parse_family("1 2\n1 2\n", 4, 2), InputError);
  CHECK_THROWS_AS(parse_family("1 5\n", 4, 2), InputError);
  CHECK_THROWS_AS(parse_family("1 2 3\n", 4, 2), InputError);
  CHECK_THROWS_AS(parse_family("1 x\n", 4, 2), InputError);
}
