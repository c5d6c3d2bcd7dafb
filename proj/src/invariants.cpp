#include "hk/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {
namespace {

Rat from_count(unsigned long long v) {
  return Rat(static_cast<unsigned long>(v));
}

std::size_t last_at_most(std::span<const Rat> xs, const Rat& bound) {
  auto past = std::upper_bound(xs.begin(), xs.end(), bound);
  return static_cast<std::size_t>(past - xs.begin()) - 1;
}

std::span<const Rat> active(const OpinionProfile& p, std::size_t lo) {
  return std::span<const Rat>(p.opinions.data() + lo, p.size() - lo);
}

StepClass classify(const OpinionProfile& cur, const OpinionProfile& next) {
  return analyze_step(cur, next).step_class;
}

}  // namespace

std::optional<ViolationReport> check_min_average_bound(
    std::span<const Rat> cur, std::span<const Rat> next, long long t) {
  const ClusterInfo c = leftmost_cluster(cur);
  if (c.u_size == cur.size()) return std::nullopt;
  const Rat lhs =
      from_count(c.u_size) * cur[0] + cur[c.u_size];
  const Rat rhs = from_count(c.nu) * next[0];
  if (lhs <= rhs) return std::nullopt;
  return ViolationReport{"min-average-bound", t, lhs, rhs, 0, std::nullopt,
                         "minimum moved less than its close neighbors allow"};
}

std::optional<ViolationReport> check_min_average_bound(
    const OpinionProfile& cur, const OpinionProfile& next) {
  const StepClass cls = classify(cur, next);
  if (cls != StepClass::I && cls != StepClass::D) return std::nullopt;
  return check_min_average_bound(std::span<const Rat>(cur.opinions),
                                 std::span<const Rat>(next.opinions),
                                 cur.time);
}

std::optional<ViolationReport> check_increment_cap(std::span<const Rat> cur,
                                                   std::span<const Rat> next,
                                                   const Rat& epsilon,
                                                   long long t,
                                                   std::size_t n_phase) {
  const ClusterInfo before = leftmost_cluster(cur);
  const ClusterInfo after = leftmost_cluster(next);
  if (after.nu <= before.nu) return std::nullopt;
  const Rat delta_nu = from_count(after.nu - before.nu);
  const Rat delta_l = lyapunov_value(next) - lyapunov_value(cur);

  const Rat diameter = next.back() - next.front();
  const Rat diameter_cap = delta_nu * diameter;
  if (delta_l > diameter_cap)
    return ViolationReport{"increment-cap", t, delta_l, diameter_cap, 0,
                           StepClass::I,
                           "merge step raised L beyond the diameter cap"};

  const Rat reach = from_count(n_phase) * epsilon;
  if (diameter <= reach) {
    const Rat reach_cap = delta_nu * reach;
    if (delta_l > reach_cap)
      return ViolationReport{"increment-cap", t, delta_l, reach_cap, 0,
                             StepClass::I,
                             "merge step raised L beyond the n*eps cap"};
  }
  return std::nullopt;
}

std::optional<ViolationReport> check_increment_cap(const OpinionProfile& cur,
                                                   const OpinionProfile& next) {
  if (classify(cur, next) != StepClass::I) return std::nullopt;
  return check_increment_cap(std::span<const Rat>(cur.opinions),
                             std::span<const Rat>(next.opinions), cur.epsilon,
                             cur.time, cur.size());
}

std::optional<ViolationReport> check_witness_nonempty(std::span<const Rat> cur,
                                                      const Rat& epsilon,
                                                      long long t) {
  const ClusterInfo c = leftmost_cluster(cur);
  if (c.u_size == cur.size()) return std::nullopt;
  // N_min = [0, h0]. N_nu contains N_min iff it reaches index 0, i.e. the
  // gap d is within epsilon; it always reaches at least as far right.
  if (cur[c.u_size] - cur[0] > epsilon)
    return ViolationReport{"witness-nonempty", t, cur[c.u_size] - cur[0],
                           epsilon, 0, StepClass::D,
                           "second-left value out of the minimum's reach on a D step"};
  const std::size_t h0 = last_at_most(cur, cur[0] + epsilon);
  const std::size_t h_nu = last_at_most(cur, cur[c.u_size] + epsilon);
  if (h_nu > h0) return std::nullopt;
  return ViolationReport{"witness-nonempty", t, Rat(0), Rat(1), 0,
                         StepClass::D,
                         "second-left value sees nothing beyond the minimum's reach"};
}

std::optional<ViolationReport> check_witness_nonempty(
    const OpinionProfile& cur, const OpinionProfile& next) {
  if (classify(cur, next) != StepClass::D) return std::nullopt;
  return check_witness_nonempty(std::span<const Rat>(cur.opinions),
                                cur.epsilon, cur.time);
}

std::optional<ViolationReport> check_decrement_floor(std::span<const Rat> cur,
                                                     std::span<const Rat> next,
                                                     const Rat& epsilon,
                                                     long long t,
                                                     std::size_t n_phase) {
  const Rat decrement = lyapunov_value(cur) - lyapunov_value(next);
  const Rat floor = epsilon / (Rat(3) * from_count(n_phase));
  if (decrement >= floor) return std::nullopt;
  return ViolationReport{"decrement-floor", t, decrement, floor, 0,
                         StepClass::D,
                         "D step shrank L by less than eps/(3n)"};
}

std::optional<ViolationReport> check_decrement_floor(
    const OpinionProfile& cur, const OpinionProfile& next) {
  if (classify(cur, next) != StepClass::D) return std::nullopt;
  return check_decrement_floor(std::span<const Rat>(cur.opinions),
                               std::span<const Rat>(next.opinions),
                               cur.epsilon, cur.time, cur.size());
}

CheckSuiteResult check_total_budget(const AnnotatedTrajectory& annotated,
                                    const PhaseDecomposition& decomposition) {
  if (annotated.trajectory.truncated)
    throw std::invalid_argument("check_total_budget: trajectory is truncated");
  return phase_budget_check(annotated, decomposition);
}

CheckSuiteResult run_suite(const AnnotatedTrajectory& annotated,
                           const PhaseDecomposition& decomposition) {
  if (annotated.trajectory.truncated)
    throw std::invalid_argument("run_suite: trajectory is truncated");

  CheckSuiteResult r;
  const auto& profiles = annotated.trajectory.profiles;
  const Rat& eps = annotated.epsilon();
  const long long T = annotated.last_time();

  for (long long t = 0; t <= T; ++t) {
    r.count("order");
    const auto& xs = profiles[t].opinions;
    if (!std::is_sorted(xs.begin(), xs.end()))
      r.add(ViolationReport{"order", t, Rat(0), Rat(0), 0, std::nullopt,
                            "opinions out of order"});
  }
  for (long long t = 0; t < T; ++t) {
    const auto& xs = profiles[t].opinions;
    const auto& ys = profiles[t + 1].opinions;
    r.count("order");
    if (ys.back() > xs.back())
      r.add(ViolationReport{"order", t, ys.back(), xs.back(), 0, std::nullopt,
                            "maximum increased"});
    r.count("order");
    if (ys.front() < xs.front())
      r.add(ViolationReport{"order", t, ys.front(), xs.front(), 0,
                            std::nullopt, "minimum decreased"});

    r.count("min-cluster-monotone");
    const std::size_t u_cur = leftmost_cluster(profiles[t]).u_size;
    const std::size_t u_next = leftmost_cluster(profiles[t + 1]).u_size;
    if (u_next < u_cur)
      r.add(ViolationReport{"min-cluster-monotone", t, from_count(u_next),
                            from_count(u_cur), 0, std::nullopt,
                            "minimum cluster shrank"});
  }

  for (const PhaseRecord& ph : decomposition.phases) {
    for (long long t = ph.start; t < ph.end; ++t) {
      const StepClass cls = annotated.analyses[t].step_class;
      const auto cur = active(profiles[t], ph.active_lo);
      const auto next = active(profiles[t + 1], ph.active_lo);

      if (cls != StepClass::S &&
          annotated.analyses[t].u_size < ph.n_k) {
        r.count("min-average-bound");
        if (auto v = check_min_average_bound(cur, next, t)) {
          v->phase = ph.k;
          v->step_class = cls;
          r.add(std::move(v));
        }
      }
      if (cls == StepClass::I) {
        r.count("increment-cap");
        if (auto v = check_increment_cap(cur, next, eps, t, ph.n_k)) {
          v->phase = ph.k;
          r.add(std::move(v));
        }
      }
      if (cls == StepClass::D) {
        r.count("witness-nonempty");
        if (auto v = check_witness_nonempty(cur, eps, t)) {
          v->phase = ph.k;
          r.add(std::move(v));
        }
        r.count("decrement-floor");
        const Rat decrement =
            annotated.analyses[t].lyapunov - annotated.analyses[t + 1].lyapunov;
        const Rat floor = eps / (Rat(3) * from_count(ph.n_k));
        if (decrement < floor)
          r.add(ViolationReport{"decrement-floor", t, decrement, floor, ph.k,
                                StepClass::D,
                                "D step shrank L by less than eps/(3n)"});
        const Rat ratio = decrement * Rat(3) * from_count(ph.n_k) / eps;
        if (!r.min_decrement_ratio || ratio < *r.min_decrement_ratio)
          r.min_decrement_ratio = ratio;
      }
    }

    // Merge sizes telescope: within one phase the I steps account exactly
    // for the growth of nu over the step range they cover.
    r.count("telescoping");
    const long long probe = ph.ends_in_split ? ph.end - 1 : ph.end;
    Rat gained(0);
    for (long long t : ph.i_steps)
      gained += from_count(annotated.analyses[t + 1].nu) -
                from_count(annotated.analyses[t].nu);
    const Rat expected = from_count(annotated.analyses[probe].nu) -
                         from_count(annotated.analyses[ph.start].nu);
    if (gained != expected)
      r.add(ViolationReport{"telescoping", ph.end, gained, expected, ph.k,
                            std::nullopt,
                            "I-step nu increments do not telescope"});
  }

  // Single-phase consensus runs keep the initial value plus all merge
  // increments within n^2 eps.
  if (decomposition.phases.size() == 1 &&
      leftmost_cluster(profiles.back()).u_size == profiles.back().size()) {
    r.count("increment-budget");
    Rat total = annotated.analyses.front().lyapunov;
    for (long long t : annotated.i_steps)
      total += annotated.analyses[t + 1].lyapunov -
               annotated.analyses[t].lyapunov;
    const std::size_t n = profiles.front().size();
    const Rat budget = from_count(n) * from_count(n) * eps;
    if (total > budget)
      r.add(ViolationReport{"increment-budget", T, total, budget, 1,
                            std::nullopt,
                            "initial L plus merge increments exceed n^2 eps"});
  }

  r.merge(check_total_budget(annotated, decomposition));

  std::sort(r.violations.begin(), r.violations.end(),
            [](const ViolationReport& a, const ViolationReport& b) {
              return a.t != b.t ? a.t < b.t : a.check_id < b.check_id;
            });
  return r;
}

}  // namespace hk
