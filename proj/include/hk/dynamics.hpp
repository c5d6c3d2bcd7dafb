#pragma once

#include <span>
#include <vector>

#include "hk/profile.hpp"

namespace hk {

// Neighbor interval of agent i (0-based). O(log n) on the sorted profile.
// Throws std::out_of_range for i >= n.
NeighborInterval neighbors(const OpinionProfile& profile, std::size_t i);

// All n intervals in one two-pointer sweep, O(n) amortized comparisons.
// Elementwise identical to calling neighbors() per agent; both lo and hi
// are non-decreasing in i.
std::vector<NeighborInterval> all_neighbors(const OpinionProfile& profile);
std::vector<NeighborInterval> all_neighbors(std::span<const Rat> opinions,
                                            const Rat& epsilon);

// One synchronous update: every agent moves to the exact average of its
// neighbors' opinions. Output stays sorted; sortedness is re-checked and a
// std::logic_error signals a broken averaging path.
OpinionProfile step(const OpinionProfile& profile);
std::vector<Rat> step_opinions(std::span<const Rat> opinions,
                               const Rat& epsilon);

// True iff one step leaves every opinion exactly unchanged.
bool is_terminated(const OpinionProfile& profile);

// Step budget 3n^3 + n; exceeding it without reaching a fixed point is
// itself a reportable finding.
unsigned long long default_max_steps(std::size_t n);

struct SimulationResult {
  Trajectory trajectory;
  TerminationResult result;
};

// Runs until x(t+1) = x(t) or max_steps steps have been taken. The returned
// trajectory holds x(0..T); truncation is signaled in the result, never an
// error. The initial profile's time is normalized to 0.
SimulationResult simulate(const OpinionProfile& initial,
                          unsigned long long max_steps);
SimulationResult simulate(const OpinionProfile& initial);

// Floating-point variant for speed comparisons only. Termination is the
// approximate test max_i |x_i(t+1) - x_i(t)| <= tau, so results from this
// mode are excluded from invariant verification.
struct FloatSimulationResult {
  std::vector<std::vector<double>> profiles;
  long long T = 0;
  bool truncated = false;
};
FloatSimulationResult simulate_float(const OpinionProfile& initial,
                                     unsigned long long max_steps, double tau);

}  // namespace hk
