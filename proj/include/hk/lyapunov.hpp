#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hk/dynamics.hpp"

namespace hk {

// Step classes over [0, T):
//   S — the step lands in a state whose leftmost cluster sits more than
//       epsilon away from the rest (a freeze boundary),
//   I — not S, and the leftmost cluster grew,
//   D — not S, and the leftmost cluster stayed put.
// Terminal marks the end-of-trajectory record, which classifies no step.
enum class StepClass { I, D, S, Terminal };
const char* to_string(StepClass c);

struct ClusterInfo {
  std::size_t u_size = 0;  // agents sharing the minimum opinion
  std::size_t nu = 0;      // u_size + 1; exceeds n at consensus
};
ClusterInfo leftmost_cluster(std::span<const Rat> opinions);
ClusterInfo leftmost_cluster(const OpinionProfile& profile);

// L = |U| * (x_max - x_min) + (x_max - x_nu), and 0 at consensus where no
// second-left value exists. Non-negative; grows only when the leftmost
// cluster absorbs agents.
Rat lyapunov_value(std::span<const Rat> opinions);
Rat lyapunov_value(const OpinionProfile& profile);

// Per-state instrumentation record. When produced by annotate() the values
// are local to the active (not yet frozen) agent range; witness_q is an
// absolute 0-based agent index.
struct StepAnalysis {
  long long t = 0;
  std::size_t u_size = 0;
  std::size_t nu = 0;
  Rat lyapunov;
  std::size_t m = 0;                    // neighbors of the minimum beyond nu
  std::optional<Rat> x_tilde;           // mean over those m agents
  std::optional<Rat> d;                 // x_nu - x_min; absent at consensus
  std::optional<std::size_t> witness_q; // first neighbor of nu outside N_min
  StepClass step_class = StepClass::Terminal;
};

// State-only analysis (class Terminal).
StepAnalysis analyze_state(std::span<const Rat> opinions, const Rat& epsilon,
                           long long t);

// Full record for the transition t -> t+1. The pair must satisfy
// next = step(cur); the profile overload verifies this and throws
// std::invalid_argument on mismatch.
StepAnalysis analyze_step(const OpinionProfile& cur,
                          const OpinionProfile& next);
StepAnalysis analyze_step_range(std::span<const Rat> cur,
                                std::span<const Rat> next, const Rat& epsilon,
                                long long t, std::size_t base = 0);

// Trajectory plus one analysis per state (the last has class Terminal) and
// the partition of {0..T-1} into I/D/S steps. Analyses are phase-local:
// after each S step the frozen leftmost cluster is dropped from the active
// range used for subsequent records.
struct AnnotatedTrajectory {
  Trajectory trajectory;
  std::vector<StepAnalysis> analyses;
  std::vector<long long> i_steps;
  std::vector<long long> d_steps;
  std::vector<long long> s_steps;

  const Rat& epsilon() const { return trajectory.profiles.front().epsilon; }
  long long last_time() const { return trajectory.last_time(); }
};

AnnotatedTrajectory annotate(Trajectory trajectory);

}  // namespace hk
