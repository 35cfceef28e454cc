#include "teachlab/nc_teaching.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "teachlab/combinatorics.hpp"

namespace teachlab {

int NCTeacher::order() const {
  int d = 0;
  for (const auto& s : sets) d = std::max(d, s.count());
  return d;
}

bool NCTeacher::normalized() const {
  const int d = order();
  return std::all_of(sets.begin(), sets.end(), [&](const InstanceSet& s) { return s.count() == d; });
}

const InstanceSet& NCTeacher::set_for(const Concept& c) const {
  int i = concepts.index_of(c);
  if (i < 0) throw InputError("concept " + c.to_string() + " has no teaching set");
  return sets[static_cast<std::size_t>(i)];
}

bool clash(const Concept& c, const Concept& c2, const InstanceSet& s, const InstanceSet& s2) {
  if (c == c2) throw InputError("clash is only defined for distinct concepts");
  return agrees_on(c, c2, s | s2);
}

std::optional<std::pair<std::size_t, std::size_t>> find_clash(const NCTeacher& t) {
  if (t.sets.size() != t.concepts.size()) throw InputError("teacher does not cover every concept");
  for (std::size_t i = 0; i < t.concepts.size(); ++i)
    for (std::size_t j = i + 1; j < t.concepts.size(); ++j)
      if (clash(t.concepts[i], t.concepts[j], t.sets[i], t.sets[j])) return std::pair{i, j};
  return std::nullopt;
}

bool is_nc_teacher(const NCTeacher& t) { return !find_clash(t).has_value(); }

NCTeacher normalize_teacher(const NCTeacher& t, int d) {
  const int n = t.concepts.domain_size();
  if (d < t.order()) throw InputError("cannot normalize to d below the teacher's order");
  if (d > n) throw InputError("cannot normalize to d above the domain size");
  NCTeacher out = t;
  for (auto& s : out.sets) {
    for (int pos = 0; pos < n && s.count() < d; ++pos)
      if (!s.test(pos)) s.set(pos);
  }
  return out;
}

int nctd_lower_bound(int n, std::size_t class_size) {
  for (int d = 0; d <= n; ++d) {
    // 2^d * C(n, d) grows past any realistic class size long before overflow.
    long double capacity = std::ldexp(static_cast<long double>(binomial(n, d)), d);
    if (capacity >= static_cast<long double>(class_size)) return d;
  }
  return n;
}

int nctd_lower_bound(const ConceptClass& k) { return nctd_lower_bound(k.domain_size(), k.size()); }

NCTeacher full_domain_teacher(const ConceptClass& k) {
  NCTeacher t{k, std::vector<InstanceSet>(k.size(), InstanceSet::full(k.domain_size()))};
  return t;
}

namespace {

struct CandidateTag;
using CandidateMask = BasicBitSet<CandidateTag>;

/**
 * Backtracking over assignments of d-subsets with arc consistency maintained
 * after every assignment. For concepts X, Y with difference set D, a value S
 * of X is supported by Y iff S hits D or some remaining value of Y hits D;
 * so revising X against Y is one mask test. The next concept is the
 * unassigned one with the fewest remaining candidates (lowest index on ties);
 * candidates are tried in lexicographic order.
 */
class TeacherSearch {
 public:
  TeacherSearch(const ConceptClass& k, int d, Budget& budget)
      : k_(k), m_(k.size()), candidates_(k_subsets_lex(k.domain_size(), d)), budget_(budget) {
    domains_.assign(m_, CandidateMask::full(static_cast<int>(candidates_.size())));
    assignment_.assign(m_, -1);
    pair_mask_.assign(m_ * m_, -1);
  }

  std::optional<std::vector<InstanceSet>> run() {
    if (candidates_.empty()) return std::nullopt;
    if (!solve(0)) return std::nullopt;
    std::vector<InstanceSet> sets;
    sets.reserve(m_);
    for (int idx : assignment_) sets.push_back(candidates_[static_cast<std::size_t>(idx)]);
    return sets;
  }

 private:
  /// Candidates hitting the difference set of concepts i and j.
  const CandidateMask& hitting(std::size_t i, std::size_t j) {
    int& slot = pair_mask_[i * m_ + j];
    if (slot < 0) {
      InstanceSet diff = difference_set(k_[i], k_[j]);
      auto it = mask_ids_.find(diff);
      if (it == mask_ids_.end()) {
        CandidateMask mask(static_cast<int>(candidates_.size()));
        for (std::size_t c = 0; c < candidates_.size(); ++c)
          if (candidates_[c].intersects(diff)) mask.set(static_cast<int>(c));
        masks_.push_back(std::move(mask));
        it = mask_ids_.emplace(std::move(diff), static_cast<int>(masks_.size() - 1)).first;
      }
      slot = it->second;
      pair_mask_[j * m_ + i] = slot;
    }
    return masks_[static_cast<std::size_t>(slot)];
  }

  void narrow(std::size_t x, const CandidateMask& allowed) {
    trail_.emplace_back(x, domains_[x]);
    domains_[x] &= allowed;
  }

  /// Restores arc consistency starting from the concepts in queue_. False on a wipeout.
  bool propagate() {
    while (!queue_.empty()) {
      std::size_t y = queue_.back();
      queue_.pop_back();
      queued_[y] = false;
      for (std::size_t x = 0; x < m_; ++x) {
        if (x == y) continue;
        const CandidateMask& hit = hitting(x, y);
        if (domains_[y].intersects(hit) || domains_[x].is_subset_of(hit)) continue;
        narrow(x, hit);
        if (domains_[x].none()) return false;
        if (!queued_[x]) {
          queued_[x] = true;
          queue_.push_back(x);
        }
      }
    }
    return true;
  }

  void clear_queue() {
    for (std::size_t y : queue_) queued_[y] = false;
    queue_.clear();
  }

  bool solve(std::size_t assigned) {
    budget_.tick();
    if (assigned == 0) {
      queued_.assign(m_, true);
      for (std::size_t i = 0; i < m_; ++i) queue_.push_back(i);
      if (!propagate()) return false;
    }
    if (assigned == m_) return true;

    std::size_t var = m_;
    int var_size = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (assignment_[i] >= 0) continue;
      int sz = domains_[i].count();
      if (var == m_ || sz < var_size) var = i, var_size = sz;
    }
    if (var_size == 0) return false;

    const CandidateMask options = domains_[var];
    for (int cand = options.find_first(); cand < options.size(); cand = options.find_next(cand + 1)) {
      const std::size_t mark = trail_.size();
      assignment_[var] = cand;
      CandidateMask only(options.size());
      only.set(cand);
      narrow(var, only);
      queued_[var] = true;
      queue_.push_back(var);
      if (propagate() && solve(assigned + 1)) return true;
      clear_queue();
      while (trail_.size() > mark) {
        domains_[trail_.back().first] = std::move(trail_.back().second);
        trail_.pop_back();
      }
      assignment_[var] = -1;
    }
    return false;
  }

  const ConceptClass& k_;
  std::size_t m_;
  std::vector<InstanceSet> candidates_;
  Budget& budget_;
  std::vector<CandidateMask> domains_;
  std::vector<int> assignment_;
  std::vector<std::pair<std::size_t, CandidateMask>> trail_;
  std::vector<std::size_t> queue_;
  std::vector<bool> queued_;
  std::vector<int> pair_mask_;
  std::vector<CandidateMask> masks_;
  std::unordered_map<InstanceSet, int, BitSetHash> mask_ids_;
};

}  // namespace

std::optional<NCTeacher> find_nc_teacher(const ConceptClass& k, int d, Budget& budget) {
  const int n = k.domain_size();
  if (d < 0 || d > n) throw InputError("teacher order must lie in [0, n]");
  if (k.size() <= 1) {
    InstanceSet s(n);
    for (int pos = 0; pos < d; ++pos) s.set(pos);
    return NCTeacher{k, std::vector<InstanceSet>(k.size(), s)};
  }
  if (d == 0) return std::nullopt;
  TeacherSearch search(k, d, budget);
  auto sets = search.run();
  if (!sets) return std::nullopt;
  return NCTeacher{k, std::move(*sets)};
}

NctdResult nctd(const ConceptClass& k, int d_max, Budget& budget) {
  if (k.empty()) throw InputError("NCTD of an empty class");
  const int n = k.domain_size();
  d_max = std::min(d_max, n);
  NctdResult result;
  result.lower_bound = nctd_lower_bound(k);
  result.upper_bound = n;
  for (int d = result.lower_bound; d <= d_max; ++d) {
    std::optional<NCTeacher> teacher;
    try {
      teacher = find_nc_teacher(k, d, budget);
    } catch (const BudgetExceeded&) {
      result.status = NctdStatus::inconclusive;
      result.lower_bound = d;
      return result;
    }
    if (teacher) {
      result.status = NctdStatus::exact;
      result.d = d;
      result.lower_bound = d;
      result.upper_bound = d;
      result.teacher = std::move(teacher);
      return result;
    }
    result.lower_bound = d + 1;
  }
  result.status = NctdStatus::exceeds_max;
  return result;
}

NctdResult nctd(const ConceptClass& k) {
  Budget unlimited;
  return nctd(k, k.domain_size(), unlimited);
}

std::string serialize_teacher(const NCTeacher& t) {
  std::string out = "n=" + std::to_string(t.concepts.domain_size()) + " d=" + std::to_string(t.order()) + "\n";
  for (std::size_t i = 0; i < t.concepts.size(); ++i) {
    out += t.concepts[i].to_string();
    out += " :";
    for (Instance x : t.sets[i].instances()) out += " " + std::to_string(x);
    out += '\n';
  }
  return out;
}

NCTeacher parse_teacher(std::string_view text) {
  int n = -1, d = -1;
  ConceptClass k;
  std::vector<InstanceSet> sets;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "teacher file line " + std::to_string(line_no) + ": ";
    if (n < 0) {
      std::istringstream hs{std::string(line)};
      std::string a, b;
      hs >> a >> b;
      if (a.rfind("n=", 0) != 0 || b.rfind("d=", 0) != 0) throw InputError("teacher file: missing 'n=<int> d=<int>' header");
      n = parse_int(std::string_view(a).substr(2), "n");
      d = parse_int(std::string_view(b).substr(2), "d");
      if (n < 1 || d < 0 || d > n) throw InputError("teacher file: invalid header values");
      k = ConceptClass(n);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw InputError(where + "expected '<bits> : instances'");
    std::string_view bits = trim(line.substr(0, colon));
    if (static_cast<int>(bits.size()) != n) throw InputError(where + "concept has wrong length");
    Concept c;
    try {
      c = Concept::from_string(bits);
    } catch (const std::invalid_argument&) {
      throw InputError(where + "only 0/1 allowed in the concept");
    }
    InstanceSet s(n);
    std::istringstream is{std::string(line.substr(colon + 1))};
    std::string tok;
    while (is >> tok) {
      int x = parse_int(tok, "instance");
      if (x < 1 || x > n) throw InputError(where + "instance out of range");
      if (s.contains(x)) throw InputError(where + "repeated instance");
      s.insert(x);
    }
    if (s.count() > d) throw InputError(where + "teaching set larger than d");
    if (!k.add(c)) throw InputError(where + "duplicate concept");
    sets.push_back(std::move(s));
  }
  if (n < 0) throw InputError("teacher file: missing 'n=<int> d=<int>' header");
  return NCTeacher{std::move(k), std::move(sets)};
}

NCTeacher parse_teacher(std::string_view text, const ConceptClass& k) {
  NCTeacher raw = parse_teacher(text);
  require_same_domain(k.domain_size(), raw.concepts.domain_size());
  if (raw.concepts.size() != k.size()) throw InputError("teacher and class list different numbers of concepts");
  NCTeacher out{k, {}};
  out.sets.reserve(k.size());
  for (const auto& c : k) {
    int i = raw.concepts.index_of(c);
    if (i < 0) throw InputError("teacher has no set for concept " + c.to_string());
    out.sets.push_back(raw.sets[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace teachlab
