#include "teachlab/johnson.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "teachlab/combinatorics.hpp"

namespace teachlab {

namespace {

// Largest number of (k+1)-subsets the greedy fallback will count over.
constexpr std::uint64_t kGreedyLimit = 5'000'000;

std::vector<int> positions_of(const InstanceSet& s) {
  std::vector<int> out;
  s.for_each([&](int p) { out.push_back(p); });
  return out;
}

std::uint64_t rank_of(const InstanceSet& s) { return colex_rank(positions_of(s)); }

/// All k-subsets of [n] indexed by colex rank.
std::vector<InstanceSet> k_subsets_colex(int n, int k) {
  std::vector<InstanceSet> out(binomial(n, k));
  for_each_combination(n, k, [&](const std::vector<int>& c) {
    InstanceSet s(n);
    for (int p : c) s.set(p);
    out[colex_rank(c)] = std::move(s);
  });
  return out;
}

}  // namespace

KSetFamily::KSetFamily(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k > n) throw InputError("a k-set family needs 1 <= k <= n");
}

KSetFamily::KSetFamily(int n, int k, std::vector<InstanceSet> members) : KSetFamily(n, k) {
  for (auto& m : members) add(m);
}

bool KSetFamily::contains(const InstanceSet& s) const { return index_.count(s) != 0; }

void KSetFamily::add(const InstanceSet& s) {
  require_same_domain(n_, s.size());
  if (s.count() != k_) throw InputError("family member " + s.to_string() + " does not have size k");
  if (!index_.insert(s).second) throw InputError("duplicate family member " + s.to_string());
  members_.push_back(s);
}

KSetFamily KSetFamily::sorted() const {
  KSetFamily out = *this;
  std::sort(out.members_.begin(), out.members_.end(),
            [](const InstanceSet& a, const InstanceSet& b) { return rank_of(a) < rank_of(b); });
  return out;
}

bool operator==(const KSetFamily& a, const KSetFamily& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_ || a.size() != b.size()) return false;
  return std::all_of(a.members_.begin(), a.members_.end(), [&](const InstanceSet& s) { return b.contains(s); });
}

bool johnson_adjacent(const InstanceSet& a, const InstanceSet& b) {
  require_same_domain(a.size(), b.size());
  const int k = a.count();
  if (b.count() != k) throw InputError("Johnson adjacency needs sets of equal size");
  return (a & b).count() == k - 1;
}

const char* to_string(CliqueClass c) {
  switch (c) {
    case CliqueClass::wide: return "wide";
    case CliqueClass::narrow: return "narrow";
    case CliqueClass::both: return "both";
    case CliqueClass::neither: return "neither";
  }
  return "?";
}

CliqueClass classify_clique(const std::vector<InstanceSet>& clique) {
  if (clique.empty()) return CliqueClass::neither;
  const int k = clique.front().count();
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!johnson_adjacent(clique[i], clique[j])) throw InputError("sets do not form a clique");
  InstanceSet common = clique.front(), all = clique.front();
  for (const auto& s : clique) {
    common &= s;
    all |= s;
  }
  bool wide = common.count() == k - 1;
  bool narrow = all.count() == k + 1;
  if (wide && narrow) return CliqueClass::both;
  if (wide) return CliqueClass::wide;
  if (narrow) return CliqueClass::narrow;
  return CliqueClass::neither;
}

std::vector<KSetFamily> narrow_cliques(int n, int k) {
  if (k < 1 || k + 1 > n) throw InputError("narrow cliques need 1 <= k < n");
  std::vector<KSetFamily> out;
  for_each_combination(n, k + 1, [&](const std::vector<int>& d) {
    KSetFamily clique(n, k);
    for (int drop : d) {
      InstanceSet s(n);
      for (int p : d)
        if (p != drop) s.set(p);
      clique.add(s);
    }
    out.push_back(clique.sorted());
  });
  return out;
}

bool has_narrow_clique(const KSetFamily& f, int t) {
  std::unordered_map<InstanceSet, int, BitSetHash> inside;
  for (const auto& a : f.members())
    for (int x = 0; x < f.n(); ++x) {
      if (a.test(x)) continue;
      InstanceSet d = a;
      d.set(x);
      if (++inside[d] > t) return true;
    }
  return false;
}

KSetFamily restrict_family(const KSetFamily& f, Instance i) {
  if (i < 1 || i > f.n()) throw InputError("instance outside the family's domain");
  if (f.n() - 1 < f.k()) throw InputError("restriction would leave fewer than k instances");
  KSetFamily out(f.n() - 1, f.k());
  for (const auto& a : f.members()) {
    if (a.contains(i)) continue;
    InstanceSet b(f.n() - 1);
    a.for_each([&](int p) { b.set(p < i - 1 ? p : p - 1); });
    out.add(b);
  }
  return out;
}

KSetFamily complement_family(const KSetFamily& f) {
  if (f.k() == f.n()) throw InputError("complement of k = n lands in J(n, 0)");
  KSetFamily out(f.n(), f.n() - f.k());
  for (const auto& a : f.members()) out.add(~a);
  return out;
}

int occurrences(const KSetFamily& f, Instance i) {
  return static_cast<int>(std::count_if(f.members().begin(), f.members().end(),
                                        [&](const InstanceSet& a) { return a.contains(i); }));
}

Instance least_frequent_instance(const KSetFamily& f) {
  Instance best = 1;
  for (Instance i = 2; i <= f.n(); ++i)
    if (occurrences(f, i) < occurrences(f, best)) best = i;
  return best;
}

KSetFamily greedy_family(int n, int k, int t) {
  if (!(1 <= t && t <= k && k <= n)) throw InputError("greedy family needs 1 <= t <= k <= n");
  KSetFamily out(n, k);
  if (n == k) {
    out.add(InstanceSet::full(n));
    return out;
  }
  std::vector<int> counts(binomial(n, k + 1), 0);
  std::vector<std::uint64_t> ranks;
  for_each_combination(n, k, [&](const std::vector<int>& c) {
    ranks.clear();
    for (int x = 0; x < n; ++x) {
      if (std::binary_search(c.begin(), c.end(), x)) continue;
      std::vector<int> d = c;
      d.insert(std::upper_bound(d.begin(), d.end(), x), x);
      ranks.push_back(colex_rank(d));
      if (counts[ranks.back()] >= t) return;
    }
    for (auto r : ranks) ++counts[r];
    InstanceSet s(n);
    for (int p : c) s.set(p);
    out.add(s);
  });
  return out.sorted();
}

namespace {

/**
 * Include-first depth-first search over the k-subsets in colex order, with
 * one counter per (k+1)-subset. The first maximum found is colex-least.
 */
class HMaxSearch {
 public:
  HMaxSearch(int n, int k, int t, HMaxPruning pruning, std::uint64_t upper, Budget& budget)
      : n_(n), k_(k), t_(t), pruning_(pruning), upper_(upper), budget_(budget), items_(k_subsets_colex(n, k)) {
    counts_.assign(binomial(n, k + 1), 0);
    supersets_.resize(items_.size());
    for (std::size_t r = 0; r < items_.size(); ++r) {
      std::vector<int> pos = positions_of(items_[r]);
      for (int x = 0; x < n; ++x) {
        if (items_[r].test(x)) continue;
        std::vector<int> d = pos;
        d.insert(std::upper_bound(d.begin(), d.end(), x), x);
        supersets_[r].push_back(static_cast<std::uint32_t>(colex_rank(d)));
      }
    }
    avail_.assign(counts_.size(), 0);
  }

  /// Runs the search; best_ only counts families of at least `floor_size` members.
  void run(std::uint64_t floor_size) {
    best_size_ = floor_size == 0 ? 0 : floor_size - 1;
    found_ = false;
    chosen_.clear();
    dfs(0, 0);
  }

  bool found() const { return found_; }
  std::uint64_t best_size() const { return best_size_; }
  const std::vector<std::size_t>& best() const { return best_; }
  const std::vector<InstanceSet>& items() const { return items_; }

 private:
  bool fits(std::size_t r) const {
    return std::all_of(supersets_[r].begin(), supersets_[r].end(), [&](std::uint32_t d) { return counts_[d] < t_; });
  }

  std::uint64_t bound(std::size_t from, std::uint64_t size) {
    std::uint64_t open = 0;
    for (std::size_t r = from; r < items_.size(); ++r)
      if (fits(r)) ++open;
    std::uint64_t b = size + open;
    if (pruning_ == HMaxPruning::trivial || open == 0) return b;
    // Each member lies in n-k of the (k+1)-subsets and each of those holds at most t members.
    std::fill(avail_.begin(), avail_.end(), 0);
    for (std::size_t r = from; r < items_.size(); ++r)
      if (fits(r))
        for (auto d : supersets_[r]) ++avail_[d];
    std::uint64_t total = 0;
    for (std::size_t d = 0; d < counts_.size(); ++d)
      total += static_cast<std::uint64_t>(std::min(t_, counts_[d] + avail_[d]));
    return std::min(b, total / static_cast<std::uint64_t>(n_ - k_));
  }

  void dfs(std::size_t r, std::uint64_t size) {
    budget_.tick();
    if (done_) return;
    if (r == items_.size()) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen_;
        found_ = true;
        if (best_size_ >= upper_) done_ = true;
      }
      return;
    }
    if (bound(r, size) <= best_size_) return;
    if (fits(r)) {
      for (auto d : supersets_[r]) ++counts_[d];
      chosen_.push_back(r);
      dfs(r + 1, size + 1);
      chosen_.pop_back();
      for (auto d : supersets_[r]) --counts_[d];
      if (done_) return;
    }
    dfs(r + 1, size);
  }

  int n_, k_, t_;
  HMaxPruning pruning_;
  std::uint64_t upper_;
  Budget& budget_;
  std::vector<InstanceSet> items_;
  std::vector<std::vector<std::uint32_t>> supersets_;
  std::vector<int> counts_, avail_;
  std::vector<std::size_t> chosen_, best_;
  std::uint64_t best_size_ = 0;
  bool found_ = false, done_ = false;
};

}  // namespace

HMaxResult h_max(int n, int k, int t, Budget& budget, const HMaxOptions& options) {
  if (!(1 <= t && t <= k && k <= n)) throw InputError("h_max needs 1 <= t <= k <= n");
  HMaxResult result;
  result.witness = KSetFamily(n, k);
  if (n == k) {
    result.exact = true;
    result.value = result.upper = 1;
    result.witness.add(InstanceSet::full(n));
    return result;
  }
  std::uint64_t total = 0, counting = 0;
  try {
    total = binomial(n, k);
    counting = static_cast<std::uint64_t>(t) * binomial(n, k + 1) / static_cast<std::uint64_t>(n - k);
  } catch (const std::overflow_error&) {
    throw InputError("J(n, k) is too large to handle");
  }
  if (total > options.size_cap) {
    result.upper = counting;
    if (binomial(n, k + 1) <= kGreedyLimit) {
      result.witness = greedy_family(n, k, t);
    } else {
      InstanceSet first(n);
      for (int p = 0; p < k; ++p) first.set(p);
      result.witness.add(first);
    }
    result.value = result.witness.size();
    return result;
  }
  std::uint64_t upper = options.pruning == HMaxPruning::trivial ? total : std::min(total, counting);
  KSetFamily greedy = greedy_family(n, k, t);
  if (options.pruning == HMaxPruning::chain && n >= k + 2) {
    HMaxResult smaller = h_max(n - 1, k, t, budget, options);
    if (smaller.exact) upper = std::min(upper, static_cast<std::uint64_t>(n) * smaller.value / (n - k));
  }

  HMaxSearch search(n, k, t, options.pruning, upper, budget);
  try {
    search.run(greedy.size());
  } catch (const BudgetExceeded&) {
    result.nodes = budget.nodes_used();
    result.upper = upper;
    if (search.found() && search.best_size() > greedy.size()) {
      result.value = search.best_size();
      for (auto r : search.best()) result.witness.add(search.items()[r]);
    } else {
      result.value = greedy.size();
      result.witness = greedy.sorted();
    }
    return result;
  }
  result.exact = true;
  result.nodes = budget.nodes_used();
  result.value = result.upper = search.best_size();
  for (auto r : search.best()) result.witness.add(search.items()[r]);
  return result;
}

HMaxResult h_max(int n, int k, int t) {
  Budget unlimited;
  return h_max(n, k, t, unlimited);
}

Rational h_ratio(int n, int k, const HMaxResult& result) {
  if (!result.exact) throw InputError("h ratio needs an exactly solved H");
  return Rational(result.value) / Rational(binomial(n, k));
}

Rational h_ratio(int n, int k, int t) { return h_ratio(n, k, h_max(n, k, t)); }

std::string serialize_family(const KSetFamily& f) {
  std::string out;
  for (const auto& a : f.members()) {
    bool first = true;
    for (Instance x : a.instances()) {
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += '\n';
  }
  return out;
}

KSetFamily parse_family(std::string_view text, int n, int k) {
  KSetFamily f(n, k);
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream is{std::string(line)};
    std::string tok;
    InstanceSet s(n);
    while (is >> tok) {
      int x = parse_int(tok, "instance");
      if (x < 1 || x > n) throw InputError("witness line " + std::to_string(line_no) + ": instance out of range");
      s.insert(x);
    }
    f.add(s);
  }
  return f;
}

}  // namespace teachlab
