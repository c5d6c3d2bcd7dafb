#pragma once

#include <cstddef>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

// One simulation state: non-decreasing opinions plus the confidence bound.
// Agent i's neighbors are all j with |x_j - x_i| <= epsilon (closed bound).
struct OpinionProfile {
  Rat epsilon;
  std::vector<Rat> opinions;
  long long time = 0;

  std::size_t size() const { return opinions.size(); }
};

// Validates invariants (n >= 1, epsilon > 0, opinions sorted) and builds a
// profile. Throws std::invalid_argument on violation. Inputs that may arrive
// unsorted go through generators::ingest, which sorts first.
OpinionProfile make_profile(Rat epsilon, std::vector<Rat> opinions,
                            long long time = 0);

// Exact elementwise equality of opinion vectors; time is ignored.
bool same_opinions(const OpinionProfile& a, const OpinionProfile& b);

// Closed index interval [lo, hi] into a sorted profile, 0-based.
struct NeighborInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t count() const { return hi - lo + 1; }
  bool operator==(const NeighborInterval&) const = default;
};

// Profiles x(0), ..., x(T) of one run; when truncated, the tail state is the
// last one computed within the step budget, not a fixed point.
struct Trajectory {
  std::vector<OpinionProfile> profiles;
  bool truncated = false;

  long long last_time() const {
    return static_cast<long long>(profiles.size()) - 1;
  }
};

struct TerminationResult {
  long long T = 0;              // termination time when !truncated, else steps taken
  OpinionProfile steady_state;  // last profile reached
  bool truncated = false;
};

}  // namespace hk
