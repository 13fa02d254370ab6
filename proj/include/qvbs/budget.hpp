#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "qvbs/errors.hpp"

namespace qvbs {

inline constexpr std::size_t kDefaultBudgetMB = 1024;

/// Memory cap for dense state vectors and operators, read from QVBS_BUDGET_MB.
inline std::size_t memory_budget_bytes() {
  std::size_t mb = kDefaultBudgetMB;
  if (const char* env = std::getenv("QVBS_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
  }
  return mb * 1024 * 1024;
}

/// Throws BudgetError when `count` items of `bytes_each` exceed the budget.
inline void check_budget(std::size_t count, std::size_t bytes_each, const std::string& what) {
  const std::size_t budget = memory_budget_bytes();
  if (bytes_each != 0 && count > budget / bytes_each) {
    throw BudgetError(what + ": " + std::to_string(count) + " entries exceed the memory budget of " +
                      std::to_string(budget / (1024 * 1024)) + " MB (set QVBS_BUDGET_MB)");
  }
}

/// Integer power base^exp with overflow guard; used for (2S+1)^L style sizes.
inline std::size_t checked_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > static_cast<std::size_t>(-1) / base) throw BudgetError("dimension overflows size_t");
    r *= base;
  }
  return r;
}

}  // namespace qvbs
