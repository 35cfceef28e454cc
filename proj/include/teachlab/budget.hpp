#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace teachlab {

/// Thrown from inside a search when its Budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

/**
 * Wall-clock and node limits shared by the exact searches. A default
 * constructed budget never runs out.
 */
class Budget {
 public:
  Budget() = default;

  static Budget seconds(double secs) {
    Budget b;
    if (secs > 0)
      b.deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(secs));
    return b;
  }

  static Budget nodes(std::uint64_t limit) {
    Budget b;
    b.node_limit_ = limit;
    return b;
  }

  /// Reads TEACHLAB_BUDGET_SECS; unlimited when unset or unparsable.
  static Budget from_environment();

  /// Counts one search node; throws BudgetExceeded when a limit is hit.
  void tick() {
    ++nodes_;
    if (node_limit_ && nodes_ > *node_limit_) throw BudgetExceeded();
    if (deadline_ && (nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > *deadline_) throw BudgetExceeded();
  }

  std::uint64_t nodes_used() const { return nodes_; }
  bool limited() const { return deadline_.has_value() || node_limit_.has_value(); }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::optional<std::uint64_t> node_limit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace teachlab
