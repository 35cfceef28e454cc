#include "teachlab/tournament.hpp"

#include <sstream>

#include "teachlab/combinatorics.hpp"
#include "teachlab/random.hpp"

namespace teachlab {

Tournament::Tournament(int n) : n_(n) {
  if (n < 1) throw InputError("a tournament needs at least one player");
  bits_ = BasicBitSet<PairTag>(static_cast<int>(binomial(n, 2)));
}

std::uint64_t Tournament::pair_count() const { return binomial(n_, 2); }

std::uint64_t Tournament::pair_rank(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) throw InputError("invalid player pair");
  const auto a = static_cast<std::uint64_t>(i - 1);
  const auto nn = static_cast<std::uint64_t>(n_);
  return a * nn - a * (a + 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}

bool Tournament::has_edge(int i, int j) const {
  bool forward = bits_.test(static_cast<int>(pair_rank(i, j)));
  return i < j ? forward : !forward;
}

void Tournament::orient(int i, int j) {
  bits_.set(static_cast<int>(pair_rank(i, j)), i < j);
}

std::vector<std::pair<int, int>> Tournament::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count());
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.push_back(has_edge(i, j) ? std::pair{i, j} : std::pair{j, i});
  return out;
}

Tournament linear_tournament(int n) {
  Tournament g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.orient(i, j);
  return g;
}

Tournament random_tournament(int n, std::uint64_t seed) {
  Tournament g(n);
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++r) {
      if (splitmix_at(seed, r) >> 63) g.orient(i, j);
      else g.orient(j, i);
    }
  return g;
}

Tournament tournament_from_index(int n, std::uint64_t index) {
  Tournament g(n);
  if (g.pair_count() < 64 && (index >> g.pair_count()) != 0) throw InputError("tournament index out of range");
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++r) {
      if (r < 64 && ((index >> r) & 1U)) g.orient(i, j);
      else g.orient(j, i);
    }
  return g;
}

Concept beaten_by(const Tournament& g, int j) {
  Concept c(g.players());
  for (int i = 1; i <= g.players(); ++i)
    if (i != j && g.has_edge(i, j)) c.insert(i);
  return c;
}

ConceptClass class1(const Tournament& g) {
  ConceptClass k(g.players());
  for (int j = 1; j <= g.players(); ++j)
    if (!k.add(complement(beaten_by(g, j)))) throw std::logic_error("class1 produced a duplicate concept");
  return k;
}

ConceptClass class2(const Tournament& g) {
  ConceptClass k(g.players());
  for (int j = 1; j <= g.players(); ++j)
    if (!k.add(beaten_by(g, j))) throw std::logic_error("class2 produced a duplicate concept");
  for (int j = 1; j <= g.players(); ++j)
    if (!k.add(complement(beaten_by(g, j)))) throw std::logic_error("class2 produced a duplicate concept");
  return k;
}

NCTeacher canonical_teacher(const Tournament& g) {
  const int n = g.players();
  NCTeacher t{class2(g), {}};
  t.sets.reserve(2 * static_cast<std::size_t>(n));
  for (int round = 0; round < 2; ++round)
    for (int j = 1; j <= n; ++j) t.sets.push_back(InstanceSet::from_instances(n, {j}));
  return t;
}

Tournament recover_tournament(const ConceptClass& k, const NCTeacher& t) {
  const int n = k.domain_size();
  if (k.size() != 2 * static_cast<std::size_t>(n))
    throw RecoveryError(RecoveryFailure::wrong_size, "class must have exactly 2n concepts");
  if (t.sets.size() != k.size() || !t.concepts.same_members(k))
    throw RecoveryError(RecoveryFailure::teacher_mismatch, "teacher does not cover exactly the class");
  for (const auto& s : t.sets)
    if (s.count() != 1) throw RecoveryError(RecoveryFailure::not_order_one, "teacher must assign singletons only");
  if (!is_nc_teacher(t)) throw RecoveryError(RecoveryFailure::not_admissible, "teacher has a clash");

  // beaten[j] = C_j (the concept taught by {j} that misses j).
  std::vector<int> users(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> with_j(static_cast<std::size_t>(n) + 1, -1), without_j(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    int j = t.sets[i].find_first() + 1;
    ++users[static_cast<std::size_t>(j)];
    (t.concepts[i].contains(j) ? with_j : without_j)[static_cast<std::size_t>(j)] = static_cast<int>(i);
  }
  for (int j = 1; j <= n; ++j) {
    if (users[static_cast<std::size_t>(j)] != 2)
      throw RecoveryError(RecoveryFailure::singleton_not_shared_by_two,
                          "{" + std::to_string(j) + "} is not used by exactly two concepts");
    if (with_j[static_cast<std::size_t>(j)] < 0 || without_j[static_cast<std::size_t>(j)] < 0)
      throw RecoveryError(RecoveryFailure::singleton_pair_agrees,
                          "the two concepts taught by {" + std::to_string(j) + "} agree on it");
  }

  // (i, j) is an edge iff C_j agrees with complement(C_i) on {i}, i.e. i in C_j.
  Tournament g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Concept& cj = t.concepts[static_cast<std::size_t>(without_j[static_cast<std::size_t>(j)])];
      const Concept& ci = t.concepts[static_cast<std::size_t>(without_j[static_cast<std::size_t>(i)])];
      bool ij = cj.contains(i), ji = ci.contains(j);
      if (ij == ji) throw RecoveryError(RecoveryFailure::not_a_tournament, "edge set is not a tournament");
      ij ? g.orient(i, j) : g.orient(j, i);
    }
  if (!class2(g).same_members(k)) throw RecoveryError(RecoveryFailure::class_mismatch, "class2 of the recovered tournament differs");
  return g;
}

std::string serialize_tournament(const Tournament& g) {
  std::string out = "n=" + std::to_string(g.players()) + "\n";
  for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

Tournament parse_tournament(std::string_view text) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      if (line.substr(0, 2) != "n=") throw InputError("tournament file: missing 'n=<int>' header");
      n = parse_int(line.substr(2), "n");
      if (n < 1) throw InputError("tournament file: n must be at least 1");
      continue;
    }
    std::istringstream is{std::string(line)};
    std::string a, b, extra;
    if (!(is >> a >> b) || (is >> extra))
      throw InputError("tournament file line " + std::to_string(line_no) + ": expected 'i j'");
    edges.emplace_back(parse_int(a, "player"), parse_int(b, "player"));
  }
  if (n < 0) throw InputError("tournament file: missing 'n=<int>' header");
  Tournament g(n);
  if (edges.size() != g.pair_count())
    throw InputError("tournament file: expected " + std::to_string(g.pair_count()) + " edges, got " +
                     std::to_string(edges.size()));
  BasicBitSet<PairTag> seen(static_cast<int>(g.pair_count()));
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n) throw InputError("tournament file: player out of range");
    if (i == j) throw InputError("tournament file: self-loop");
    auto r = static_cast<int>(g.pair_rank(i, j));
    if (seen.test(r)) throw InputError("tournament file: pair {" + std::to_string(std::min(i, j)) + "," +
                                       std::to_string(std::max(i, j)) + "} listed twice");
    seen.set(r);
    g.orient(i, j);
  }
  return g;
}

}  // namespace teachlab
