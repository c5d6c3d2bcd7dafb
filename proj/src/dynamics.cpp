#include "hk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hk {
namespace {

// Opinions rescaled to one shared denominator: x_i = a[i]/den and
// epsilon = eband/den, so every neighbor test and neighbor sum is pure
// integer arithmetic.
struct Scaled {
  std::vector<mpz_class> a;
  mpz_class den;
  mpz_class eband;
};

Scaled rescale(std::span<const Rat> xs, const Rat& epsilon) {
  Scaled s;
  s.den = epsilon.get_den();
  for (const Rat& x : xs) s.den = lcm(s.den, x.get_den());
  s.a.reserve(xs.size());
  for (const Rat& x : xs) {
    mpz_class factor = s.den / x.get_den();
    s.a.emplace_back(x.get_num() * factor);
  }
  s.eband = epsilon.get_num() * mpz_class(s.den / epsilon.get_den());
  return s;
}

std::vector<NeighborInterval> sweep(const Scaled& s) {
  const std::size_t n = s.a.size();
  std::vector<NeighborInterval> iv(n);
  std::size_t lo = 0, hi = 0;
  mpz_class diff;
  for (std::size_t i = 0; i < n; ++i) {
    if (hi < i) hi = i;
    for (;;) {
      diff = s.a[i] - s.a[lo];
      if (diff <= s.eband) break;
      ++lo;
    }
    while (hi + 1 < n) {
      diff = s.a[hi + 1] - s.a[i];
      if (diff > s.eband) break;
      ++hi;
    }
    iv[i] = NeighborInterval{lo, hi};
  }
  return iv;
}

}  // namespace

NeighborInterval neighbors(const OpinionProfile& profile, std::size_t i) {
  if (i >= profile.size())
    throw std::out_of_range("neighbors: agent index out of range");
  const auto& xs = profile.opinions;
  const Rat low = xs[i] - profile.epsilon;
  const Rat high = xs[i] + profile.epsilon;
  auto first = std::lower_bound(xs.begin(), xs.end(), low);
  auto past = std::upper_bound(xs.begin(), xs.end(), high);
  return NeighborInterval{static_cast<std::size_t>(first - xs.begin()),
                          static_cast<std::size_t>(past - xs.begin()) - 1};
}

std::vector<NeighborInterval> all_neighbors(std::span<const Rat> opinions,
                                            const Rat& epsilon) {
  return sweep(rescale(opinions, epsilon));
}

std::vector<NeighborInterval> all_neighbors(const OpinionProfile& profile) {
  return all_neighbors(std::span<const Rat>(profile.opinions),
                       profile.epsilon);
}

std::vector<Rat> step_opinions(std::span<const Rat> opinions,
                               const Rat& epsilon) {
  const std::size_t n = opinions.size();
  const Scaled s = rescale(opinions, epsilon);
  const std::vector<NeighborInterval> iv = sweep(s);

  std::vector<mpz_class> prefix(n + 1);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + s.a[i];

  std::vector<Rat> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && iv[i] == iv[i - 1]) {
      out.push_back(out.back());  // identical neighborhoods share the average
      continue;
    }
    mpz_class total = prefix[iv[i].hi + 1] - prefix[iv[i].lo];
    mpz_class scale = s.den * mpz_class(static_cast<unsigned long>(iv[i].count()));
    Rat value(std::move(total), std::move(scale));
    value.canonicalize();
    out.push_back(std::move(value));
  }
  if (!std::is_sorted(out.begin(), out.end()))
    throw std::logic_error("step: order preservation violated");
  return out;
}

OpinionProfile step(const OpinionProfile& profile) {
  return OpinionProfile{
      profile.epsilon,
      step_opinions(std::span<const Rat>(profile.opinions), profile.epsilon),
      profile.time + 1};
}

bool is_terminated(const OpinionProfile& profile) {
  return step_opinions(std::span<const Rat>(profile.opinions),
                       profile.epsilon) == profile.opinions;
}

unsigned long long default_max_steps(std::size_t n) {
  const auto un = static_cast<unsigned long long>(n);
  return 3 * un * un * un + un;
}

SimulationResult simulate(const OpinionProfile& initial,
                          unsigned long long max_steps) {
  Trajectory traj;
  traj.profiles.push_back(initial);
  traj.profiles.back().time = 0;

  unsigned long long taken = 0;
  for (;;) {
    const OpinionProfile& cur = traj.profiles.back();
    std::vector<Rat> next =
        step_opinions(std::span<const Rat>(cur.opinions), cur.epsilon);
    if (next == cur.opinions) {
      traj.truncated = false;
      break;
    }
    if (taken == max_steps) {
      traj.truncated = true;
      break;
    }
    traj.profiles.push_back(
        OpinionProfile{cur.epsilon, std::move(next), cur.time + 1});
    ++taken;
  }

  TerminationResult result{static_cast<long long>(taken),
                           traj.profiles.back(), traj.truncated};
  return SimulationResult{std::move(traj), std::move(result)};
}

SimulationResult simulate(const OpinionProfile& initial) {
  return simulate(initial, default_max_steps(initial.size()));
}

FloatSimulationResult simulate_float(const OpinionProfile& initial,
                                     unsigned long long max_steps,
                                     double tau) {
  FloatSimulationResult out;
  std::vector<double> cur;
  cur.reserve(initial.size());
  for (const Rat& x : initial.opinions) cur.push_back(to_double(x));
  const double eps = to_double(initial.epsilon);
  out.profiles.push_back(cur);

  const std::size_t n = cur.size();
  unsigned long long taken = 0;
  for (;;) {
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + cur[i];
    std::vector<double> next(n);
    std::size_t lo = 0, hi = 0;
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (hi < i) hi = i;
      while (cur[i] - cur[lo] > eps) ++lo;
      while (hi + 1 < n && cur[hi + 1] - cur[i] <= eps) ++hi;
      next[i] = (prefix[hi + 1] - prefix[lo]) / static_cast<double>(hi - lo + 1);
      delta = std::max(delta, std::fabs(next[i] - cur[i]));
    }
    if (delta <= tau) {
      out.truncated = false;
      break;
    }
    if (taken == max_steps) {
      out.truncated = true;
      break;
    }
    cur = next;
    out.profiles.push_back(cur);
    ++taken;
  }
  out.T = static_cast<long long>(taken);
  return out;
}

}  // namespace hk
