#pragma once

#include <cstddef>
#include <vector>

#include "hk/checks.hpp"
#include "hk/lyapunov.hpp"

namespace hk {

// One phase [start, end) of a trajectory. Every phase except the last ends
// with an S step: at time `end` the active leftmost cluster sits more than
// epsilon from the rest, freezes, and is dropped from the active range.
struct PhaseRecord {
  std::size_t k = 1;        // 1-based phase index
  long long start = 0;
  long long end = 0;
  std::size_t active_lo = 0;  // first active agent (absolute, 0-based)
  std::size_t n_k = 0;        // active agent count
  std::size_t nu_end = 0;     // |U_k(end)| + 1 over the active range
  std::vector<long long> i_steps;
  std::vector<long long> d_steps;
  bool ends_in_split = false;
  std::size_t frozen_count = 0;  // agents frozen at `end` (split phases)
  Rat frozen_value;              // their common opinion

  long long duration() const { return end - start; }
};

struct PhaseDecomposition {
  std::vector<long long> splits;    // phase boundary times T_1 < ... < T_|S|
  std::vector<PhaseRecord> phases;  // splits.size() + 1 records, tiling [0, T)
};

// True iff the recorded state has its leftmost cluster strictly more than
// epsilon from the next opinion value.
bool detect_split(const StepAnalysis& analysis, const Rat& epsilon);

// Splits a complete annotated trajectory into phases over the shrinking
// active agent range. Throws std::invalid_argument on truncated input.
PhaseDecomposition decompose(const AnnotatedTrajectory& annotated);

// Per-phase portion of the step-count accounting:
//   split phases:  duration <= (3 n_k^2 + 1) nu_end,
//                  |D_k| <= 3 nu_end n_k^2,  |I_k| <= nu_end,
//   final phase:   duration <= 3 n_k^3 + n_k,
//   globally:      T <= 3 n^3 + n,
// plus the freeze guarantees: frozen opinions never change and the active
// minimum stays more than epsilon above every frozen value.
CheckSuiteResult phase_budget_check(const AnnotatedTrajectory& annotated,
                                    const PhaseDecomposition& decomposition);

}  // namespace hk
