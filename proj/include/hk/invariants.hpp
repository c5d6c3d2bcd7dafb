#pragma once

#include <optional>
#include <span>

#include "hk/checks.hpp"
#include "hk/phases.hpp"

namespace hk {

// Per-step checks. The span forms operate on the active agent range of one
// phase and trust the caller to apply them only at steps of the right class;
// the profile forms classify the pair themselves and return nullopt when the
// check does not apply.

// |U(t)| x_min(t) + x_nu(t) <= nu(t) x_min(t+1): dropping the trailing
// neighbors of the minimum can only lower its next value. Holds on every
// I and D step; never evaluated across a freeze boundary or at consensus.
std::optional<ViolationReport> check_min_average_bound(std::span<const Rat> cur,
                                                       std::span<const Rat> next,
                                                       long long t);
std::optional<ViolationReport> check_min_average_bound(
    const OpinionProfile& cur, const OpinionProfile& next);

// I steps: L(t+1) - L(t) <= [nu(t+1) - nu(t)] (x_max(t+1) - x_min(t+1)),
// and additionally <= [nu(t+1) - nu(t)] n_phase eps whenever the active
// diameter at t+1 is at most n_phase eps.
std::optional<ViolationReport> check_increment_cap(std::span<const Rat> cur,
                                                   std::span<const Rat> next,
                                                   const Rat& epsilon,
                                                   long long t,
                                                   std::size_t n_phase);
std::optional<ViolationReport> check_increment_cap(const OpinionProfile& cur,
                                                   const OpinionProfile& next);

// D steps: the second-left value has at least one neighbor the minimum
// cannot see (and sees everything the minimum sees).
std::optional<ViolationReport> check_witness_nonempty(std::span<const Rat> cur,
                                                      const Rat& epsilon,
                                                      long long t);
std::optional<ViolationReport> check_witness_nonempty(
    const OpinionProfile& cur, const OpinionProfile& next);

// D steps: L(t) - L(t+1) >= eps / (3 n_phase), compared exactly.
std::optional<ViolationReport> check_decrement_floor(std::span<const Rat> cur,
                                                     std::span<const Rat> next,
                                                     const Rat& epsilon,
                                                     long long t,
                                                     std::size_t n_phase);
std::optional<ViolationReport> check_decrement_floor(const OpinionProfile& cur,
                                                     const OpinionProfile& next);

// T <= 3n^3 + n plus the per-phase budgets. Throws std::invalid_argument on
// a truncated trajectory (the budget cannot be assessed).
CheckSuiteResult check_total_budget(const AnnotatedTrajectory& annotated,
                                    const PhaseDecomposition& decomposition);

// Every checker at every applicable step, plus order preservation, leftmost
// cluster monotonicity, per-phase merge telescoping, the total increment
// budget on single-phase consensus runs, and the phase/global step budgets.
// Violations come back ordered by (t, check_id).
CheckSuiteResult run_suite(const AnnotatedTrajectory& annotated,
                           const PhaseDecomposition& decomposition);

}  // namespace hk
