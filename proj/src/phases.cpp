#include "hk/phases.hpp"

#include <span>
#include <stdexcept>
#include <utility>

#include "hk/rational.hpp"

namespace hk {
namespace {

Rat from_count(unsigned long long v) {
  return Rat(static_cast<unsigned long>(v));
}

Rat from_time(long long v) {
  Rat r;
  if (v >= 0) {
    r = Rat(static_cast<unsigned long>(v));
  } else {
    r = -Rat(static_cast<unsigned long>(-v));
  }
  return r;
}

}  // namespace

bool detect_split(const StepAnalysis& analysis, const Rat& epsilon) {
  return analysis.d.has_value() && *analysis.d > epsilon;
}

PhaseDecomposition decompose(const AnnotatedTrajectory& annotated) {
  if (annotated.trajectory.truncated)
    throw std::invalid_argument("decompose: trajectory is truncated");

  const auto& profiles = annotated.trajectory.profiles;
  const std::size_t n = profiles.front().size();
  const long long last = annotated.last_time();

  PhaseDecomposition out;
  std::size_t active_lo = 0;
  long long start = 0;
  auto i_it = annotated.i_steps.begin();
  auto d_it = annotated.d_steps.begin();

  auto close_phase = [&](long long end, bool split) {
    PhaseRecord rec;
    rec.k = out.phases.size() + 1;
    rec.start = start;
    rec.end = end;
    rec.active_lo = active_lo;
    rec.n_k = n - active_lo;
    while (i_it != annotated.i_steps.end() && *i_it < end)
      rec.i_steps.push_back(*i_it++);
    while (d_it != annotated.d_steps.end() && *d_it < end)
      rec.d_steps.push_back(*d_it++);
    std::span<const Rat> at_end(profiles[end].opinions.data() + active_lo,
                                n - active_lo);
    const ClusterInfo c = leftmost_cluster(at_end);
    rec.nu_end = c.nu;
    rec.ends_in_split = split;
    if (split) {
      rec.frozen_count = c.u_size;
      rec.frozen_value = at_end.front();
    }
    out.phases.push_back(std::move(rec));
    if (split) {
      out.splits.push_back(end);
      active_lo += c.u_size;
      start = end;
    }
  };

  for (long long s : annotated.s_steps) close_phase(s + 1, true);
  close_phase(last, false);
  return out;
}

CheckSuiteResult phase_budget_check(const AnnotatedTrajectory& annotated,
                                    const PhaseDecomposition& decomposition) {
  CheckSuiteResult result;
  const auto& profiles = annotated.trajectory.profiles;
  const Rat& eps = annotated.epsilon();
  const std::size_t n = profiles.front().size();
  const long long T = annotated.last_time();

  for (const PhaseRecord& ph : decomposition.phases) {
    const Rat nk = from_count(ph.n_k);
    const Rat nu = from_count(ph.nu_end);

    result.count("phase-duration");
    const Rat duration = from_time(ph.duration());
    const Rat duration_cap = ph.ends_in_split
                                 ? (Rat(3) * nk * nk + 1) * nu
                                 : Rat(3) * nk * nk * nk + nk;
    if (duration > duration_cap)
      result.add(ViolationReport{
          "phase-duration", ph.end, duration, duration_cap, ph.k, std::nullopt,
          "phase lasted longer than its step budget"});

    result.count("phase-d-budget");
    const Rat d_count = from_count(ph.d_steps.size());
    const Rat d_cap = Rat(3) * nu * nk * nk;
    if (d_count > d_cap)
      result.add(ViolationReport{"phase-d-budget", ph.end, d_count, d_cap,
                                 ph.k, std::nullopt,
                                 "too many contraction (D) steps in phase"});

    result.count("phase-i-budget");
    const Rat i_count = from_count(ph.i_steps.size());
    const Rat i_cap = ph.ends_in_split ? nu : nk;
    if (i_count > i_cap)
      result.add(ViolationReport{"phase-i-budget", ph.end, i_count, i_cap,
                                 ph.k, std::nullopt,
                                 "too many merge (I) steps in phase"});

    if (!ph.ends_in_split) continue;

    // Once frozen, the cluster's opinion must never move again, and the
    // remaining minimum must stay strictly more than epsilon above it.
    result.count("frozen-constant");
    result.count("frozen-no-rejoin");
    const std::size_t next_lo = ph.active_lo + ph.frozen_count;
    bool moved = false, rejoined = false;
    for (long long t = ph.end; t <= T && !moved && !rejoined; ++t) {
      const auto& xs = profiles[t].opinions;
      for (std::size_t j = ph.active_lo; j < next_lo && !moved; ++j) {
        if (xs[j] != ph.frozen_value) {
          moved = true;
          result.add(ViolationReport{"frozen-constant", t, xs[j],
                                     ph.frozen_value, ph.k, std::nullopt,
                                     "frozen agent moved after its phase"});
        }
      }
      if (!moved && next_lo < n && xs[next_lo] - ph.frozen_value <= eps) {
        rejoined = true;
        result.add(ViolationReport{
            "frozen-no-rejoin", t, xs[next_lo] - ph.frozen_value, eps, ph.k,
            std::nullopt, "active minimum re-entered a frozen cluster's reach"});
      }
    }
  }

  result.count("termination-bound");
  const Rat total = from_time(T);
  const Rat global_cap = from_count(default_max_steps(n));
  if (total > global_cap)
    result.add(ViolationReport{"termination-bound", T, total, global_cap, 0,
                               std::nullopt,
                               "termination time exceeded 3n^3 + n"});

  std::size_t nu_sum = 0;
  for (const PhaseRecord& ph : decomposition.phases)
    if (ph.ends_in_split) nu_sum += ph.nu_end;
  if (nu_sum > n)
    result.notes.push_back(
        "sum of nu_k over split phases is " + std::to_string(nu_sum) +
        " > n = " + std::to_string(n) +
        "; the per-phase budgets and the global bound hold regardless");

  return result;
}

}  // namespace hk
