#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hk/lyapunov.hpp"

namespace hk {

// One failed comparison, with the exact values that were compared.
// check_id values are stable: "order", "min-cluster-monotone",
// "min-average-bound", "increment-cap", "witness-nonempty",
// "decrement-floor", "increment-budget", "telescoping",
// "termination-bound", "phase-duration", "phase-d-budget",
// "phase-i-budget", "frozen-constant", "frozen-no-rejoin".
struct ViolationReport {
  std::string check_id;
  long long t = 0;
  Rat lhs;
  Rat rhs;
  std::size_t phase = 0;  // 1-based; 0 for whole-trajectory checks
  std::optional<StepClass> step_class;
  std::string message;
};

struct CheckSuiteResult {
  std::size_t checks_run = 0;
  std::vector<ViolationReport> violations;
  std::map<std::string, std::size_t> per_check;
  // Minimum D-step decrement in units of eps/(3 n_k); >= 1 when the
  // decrement floor holds everywhere. Diagnostic, absent with no D steps.
  std::optional<Rat> min_decrement_ratio;
  // Non-fatal observations (counting slack and similar); see README.
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }

  void count(const std::string& id) {
    ++checks_run;
    ++per_check[id];
  }
  void add(std::optional<ViolationReport> v) {
    if (v) violations.push_back(*std::move(v));
  }
  void merge(CheckSuiteResult other);
};

}  // namespace hk
