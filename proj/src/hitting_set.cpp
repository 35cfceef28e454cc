#include "teachlab/hitting_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace teachlab {

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

}  // namespace

HittingSetSolver::HittingSetSolver(int universe, const std::vector<InstanceSet>& sets) : n_(universe) {
  std::vector<InstanceSet> sorted = sets;
  for (const auto& s : sorted) {
    require_same_domain(n_, s.size());
    if (s.none()) throw InputError("hitting set instance contains an empty set");
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const InstanceSet& a, const InstanceSet& b) { return a.count() < b.count(); });
  // Keep a set only if no kept set is contained in it.
  for (const auto& s : sorted) {
    bool redundant = std::any_of(sets_.begin(), sets_.end(), [&](const InstanceSet& kept) { return kept.is_subset_of(s); });
    if (!redundant) sets_.push_back(s);
  }
  const int m = static_cast<int>(sets_.size());
  cover_.assign(static_cast<std::size_t>(n_), SetMask(m));
  for (int i = 0; i < m; ++i) sets_[static_cast<std::size_t>(i)].for_each([&](int pos) {
    cover_[static_cast<std::size_t>(pos)].set(i);
  });
}

bool HittingSetSolver::is_hitting_set(const InstanceSet& s) const {
  return std::all_of(sets_.begin(), sets_.end(), [&](const InstanceSet& t) { return t.intersects(s); });
}

int HittingSetSolver::greedy_upper_bound() const {
  SetMask unhit = SetMask::full(static_cast<int>(sets_.size()));
  int picks = 0;
  while (unhit.any()) {
    int best_pos = -1, best_gain = 0;
    for (int x = 0; x < n_; ++x) {
      int gain = (cover_[static_cast<std::size_t>(x)] & unhit).count();
      if (gain > best_gain) best_gain = gain, best_pos = x;
    }
    unhit.subtract(cover_[static_cast<std::size_t>(best_pos)]);
    ++picks;
  }
  return picks;
}

int HittingSetSolver::packing_bound(const SetMask& unhit, const InstanceSet& allowed) const {
  InstanceSet used(n_);
  int packed = 0;
  bool infeasible = false;
  unhit.for_each([&](int i) {
    if (infeasible) return;
    const InstanceSet& s = sets_[static_cast<std::size_t>(i)];
    if (!s.intersects(allowed)) {
      infeasible = true;
      return;
    }
    InstanceSet usable = s & allowed;
    if (!usable.intersects(used)) {
      used |= usable;
      ++packed;
    }
  });
  return infeasible ? kInfeasible : packed;
}

void HittingSetSolver::branch(SetMask& unhit, InstanceSet allowed, int chosen, int& best, bool stop_at_first,
                              bool& found, Budget& budget) const {
  budget.tick();
  if (unhit.none()) {
    best = chosen;
    found = true;
    return;
  }
  int lb = packing_bound(unhit, allowed);
  if (lb >= kInfeasible || chosen + lb >= best) return;

  // Most constrained unhit set.
  int pick = -1, pick_size = kInfeasible;
  unhit.for_each([&](int i) {
    int sz = (sets_[static_cast<std::size_t>(i)] & allowed).count();
    if (sz < pick_size) pick_size = sz, pick = i;
  });
  InstanceSet options = sets_[static_cast<std::size_t>(pick)] & allowed;
  for (int e = options.find_first(); e < n_; e = options.find_next(e + 1)) {
    SetMask next = unhit;
    next.subtract(cover_[static_cast<std::size_t>(e)]);
    branch(next, allowed, chosen + 1, best, stop_at_first, found, budget);
    if (found && stop_at_first) return;
    if (chosen + 1 >= best) return;
    allowed.reset(e);
  }
}

int HittingSetSolver::minimum_size(Budget& budget) const {
  if (sets_.empty()) return 0;
  int best = greedy_upper_bound();
  bool found = false;
  SetMask unhit = SetMask::full(static_cast<int>(sets_.size()));
  branch(unhit, InstanceSet::full(n_), 0, best, false, found, budget);
  return best;
}

bool HittingSetSolver::exists_within(int limit, Budget& budget) const {
  if (sets_.empty()) return limit >= 0;
  if (limit <= 0) return false;
  int best = limit + 1;
  bool found = false;
  SetMask unhit = SetMask::full(static_cast<int>(sets_.size()));
  branch(unhit, InstanceSet::full(n_), 0, best, true, found, budget);
  return found;
}

bool HittingSetSolver::lex_search(int from, const SetMask& unhit, int remaining, std::vector<int>& chosen,
                                  Budget& budget) const {
  budget.tick();
  if (unhit.none()) return remaining == 0;
  if (remaining == 0) return false;

  InstanceSet allowed(n_);
  for (int x = from; x < n_; ++x) allowed.set(x);

  // Every unhit set needs a chosen element >= the next pick, so the next pick
  // cannot exceed the largest usable element of any unhit set.
  int ceiling = n_ - 1;
  bool dead = false;
  unhit.for_each([&](int i) {
    int last = (sets_[static_cast<std::size_t>(i)] & allowed).find_last();
    if (last < 0) dead = true;
    ceiling = std::min(ceiling, last);
  });
  if (dead) return false;
  if (packing_bound(unhit, allowed) > remaining) return false;

  for (int y = from; y <= ceiling; ++y) {
    const SetMask& hits = cover_[static_cast<std::size_t>(y)];
    if (!hits.intersects(unhit)) continue;
    SetMask next = unhit;
    next.subtract(hits);
    chosen.push_back(y);
    if (lex_search(y + 1, next, remaining - 1, chosen, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<InstanceSet> HittingSetSolver::lex_first(int size, Budget& budget) const {
  if (size < 0 || size > n_) return std::nullopt;
  std::vector<int> chosen;
  SetMask unhit = SetMask::full(static_cast<int>(sets_.size()));
  if (sets_.empty()) return size == 0 ? std::optional<InstanceSet>(InstanceSet(n_)) : std::nullopt;
  if (!lex_search(0, unhit, size, chosen, budget)) return std::nullopt;
  InstanceSet out(n_);
  for (int pos : chosen) out.set(pos);
  return out;
}

InstanceSet HittingSetSolver::minimum(Budget& budget) const {
  int size = minimum_size(budget);
  auto witness = lex_first(size, budget);
  if (!witness) throw std::logic_error("hitting set of minimum size vanished");
  return *witness;
}

}  // namespace teachlab
