#include "teachlab/budget.hpp"

#include <cstdlib>
#include <string>

namespace teachlab {

Budget Budget::from_environment() {
  const char* raw = std::getenv("TEACHLAB_BUDGET_SECS");
  if (raw == nullptr) return Budget{};
  try {
    return Budget::seconds(std::stod(raw));
  } catch (const std::exception&) {
    return Budget{};
  }
}

}  // namespace teachlab
