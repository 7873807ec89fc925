#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace gpi {

// Raised when a computation refuses to start or continue; callers must not
// emit partial results after catching it.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Soft wall-clock budget (GPI_BUDGET_MS) checked at coarse boundaries.
class BudgetGuard {
 public:
  BudgetGuard() = default;
  static BudgetGuard from_env();

  void check(const std::string& where) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace gpi
