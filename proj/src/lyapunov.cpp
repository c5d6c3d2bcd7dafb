#include "hk/lyapunov.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hk {
namespace {

// Last index j with xs[j] <= bound, assuming xs sorted and xs[0] <= bound.
std::size_t last_at_most(std::span<const Rat> xs, const Rat& bound) {
  auto past = std::upper_bound(xs.begin(), xs.end(), bound);
  return static_cast<std::size_t>(past - xs.begin()) - 1;
}

}  // namespace

const char* to_string(StepClass c) {
  switch (c) {
    case StepClass::I: return "I";
    case StepClass::D: return "D";
    case StepClass::S: return "S";
    case StepClass::Terminal: return "terminal";
  }
  return "?";
}

ClusterInfo leftmost_cluster(std::span<const Rat> opinions) {
  std::size_t u = 1;
  while (u < opinions.size() && opinions[u] == opinions[0]) ++u;
  return ClusterInfo{u, u + 1};
}

ClusterInfo leftmost_cluster(const OpinionProfile& profile) {
  return leftmost_cluster(std::span<const Rat>(profile.opinions));
}

Rat lyapunov_value(std::span<const Rat> opinions) {
  const ClusterInfo c = leftmost_cluster(opinions);
  if (c.u_size == opinions.size()) return Rat(0);
  const Rat& x_max = opinions.back();
  return Rat(static_cast<unsigned long>(c.u_size)) * (x_max - opinions.front()) +
         (x_max - opinions[c.u_size]);
}

Rat lyapunov_value(const OpinionProfile& profile) {
  return lyapunov_value(std::span<const Rat>(profile.opinions));
}

StepAnalysis analyze_state(std::span<const Rat> opinions, const Rat& epsilon,
                           long long t) {
  StepAnalysis a;
  a.t = t;
  const ClusterInfo c = leftmost_cluster(opinions);
  a.u_size = c.u_size;
  a.nu = c.nu;
  a.lyapunov = lyapunov_value(opinions);
  a.step_class = StepClass::Terminal;

  if (c.u_size < opinions.size()) {
    a.d = opinions[c.u_size] - opinions[0];
    // N_min = [0, h0]; the first u_size + 1 indices are the minimum cluster
    // plus its second-left witness, the rest form M.
    const std::size_t h0 = last_at_most(opinions, opinions[0] + epsilon);
    if (h0 > c.u_size) {
      a.m = h0 - c.u_size;
      Rat sum(0);
      for (std::size_t j = c.u_size + 1; j <= h0; ++j) sum += opinions[j];
      a.x_tilde = sum / Rat(static_cast<unsigned long>(a.m));
    }
  }
  return a;
}

StepAnalysis analyze_step_range(std::span<const Rat> cur,
                                std::span<const Rat> next, const Rat& epsilon,
                                long long t, std::size_t base) {
  StepAnalysis a = analyze_state(cur, epsilon, t);
  const ClusterInfo after = leftmost_cluster(next);

  const bool split =
      after.u_size < next.size() && next[after.u_size] - next[0] > epsilon;
  if (split) {
    a.step_class = StepClass::S;
  } else if (after.nu > a.nu) {
    a.step_class = StepClass::I;
  } else {
    a.step_class = StepClass::D;
  }

  if (a.step_class == StepClass::D && a.u_size < cur.size()) {
    const std::size_t h0 = last_at_most(cur, cur[0] + epsilon);
    const std::size_t h_nu = last_at_most(cur, cur[a.u_size] + epsilon);
    if (h_nu > h0) a.witness_q = base + h0 + 1;
  }
  return a;
}

StepAnalysis analyze_step(const OpinionProfile& cur,
                          const OpinionProfile& next) {
  if (cur.size() != next.size() || cur.epsilon != next.epsilon ||
      step_opinions(std::span<const Rat>(cur.opinions), cur.epsilon) !=
          next.opinions)
    throw std::invalid_argument("analyze_step: second profile is not the successor");
  return analyze_step_range(std::span<const Rat>(cur.opinions),
                            std::span<const Rat>(next.opinions), cur.epsilon,
                            cur.time);
}

AnnotatedTrajectory annotate(Trajectory trajectory) {
  AnnotatedTrajectory out;
  out.trajectory = std::move(trajectory);
  const auto& profiles = out.trajectory.profiles;
  const Rat& eps = profiles.front().epsilon;
  const std::size_t n = profiles.front().size();
  const long long last = static_cast<long long>(profiles.size()) - 1;

  out.analyses.reserve(profiles.size());
  std::size_t active_lo = 0;
  for (long long t = 0; t < last; ++t) {
    std::span<const Rat> cur(profiles[t].opinions.data() + active_lo,
                             n - active_lo);
    std::span<const Rat> next(profiles[t + 1].opinions.data() + active_lo,
                              n - active_lo);
    StepAnalysis a = analyze_step_range(cur, next, eps, t, active_lo);
    switch (a.step_class) {
      case StepClass::I: out.i_steps.push_back(t); break;
      case StepClass::D: out.d_steps.push_back(t); break;
      case StepClass::S: out.s_steps.push_back(t); break;
      case StepClass::Terminal: break;
    }
    out.analyses.push_back(std::move(a));
    if (out.analyses.back().step_class == StepClass::S)
      active_lo += leftmost_cluster(next).u_size;
  }
  std::span<const Rat> tail(profiles[last].opinions.data() + active_lo,
                            n - active_lo);
  out.analyses.push_back(analyze_state(tail, eps, last));
  return out;
}

}  // namespace hk
