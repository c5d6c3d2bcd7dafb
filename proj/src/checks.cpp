#include "hk/checks.hpp"

#include <algorithm>

namespace hk {

void CheckSuiteResult::merge(CheckSuiteResult other) {
  checks_run += other.checks_run;
  for (auto& v : other.violations) violations.push_back(std::move(v));
  for (const auto& [id, count] : other.per_check) per_check[id] += count;
  if (other.min_decrement_ratio &&
      (!min_decrement_ratio ||
       *other.min_decrement_ratio < *min_decrement_ratio))
    min_decrement_ratio = std::move(other.min_decrement_ratio);
  for (auto& n : other.notes) notes.push_back(std::move(n));
}

}  // namespace hk
