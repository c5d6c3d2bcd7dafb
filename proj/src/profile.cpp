#include "hk/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hk {

OpinionProfile make_profile(Rat epsilon, std::vector<Rat> opinions,
                            long long time) {
  if (opinions.empty())
    throw std::invalid_argument("profile: need at least one agent");
  if (epsilon <= 0) throw std::invalid_argument("profile: epsilon must be > 0");
  if (!std::is_sorted(opinions.begin(), opinions.end()))
    throw std::invalid_argument("profile: opinions must be non-decreasing");
  if (time < 0) throw std::invalid_argument("profile: negative time");
  return OpinionProfile{std::move(epsilon), std::move(opinions), time};
}

bool same_opinions(const OpinionProfile& a, const OpinionProfile& b) {
  return a.opinions == b.opinions;
}

}  // namespace hk
