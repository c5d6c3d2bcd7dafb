#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hk/profile.hpp"

namespace hk {

enum class InstanceKind {
  UniformRandom,
  Equidistant,
  TwoCluster,
  Dumbbell,
  FromFile,
};

const char* to_string(InstanceKind k);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);

// Description of one test instance. Randomized kinds are fully determined
// by (n, epsilon, max_denominator, seed).
struct InstanceSpec {
  InstanceKind kind = InstanceKind::Equidistant;
  std::size_t n = 1;
  Rat epsilon = Rat(1);
  std::optional<Rat> spacing;                // equidistant; defaults to epsilon
  std::optional<Rat> gap;                    // two_cluster / dumbbell; defaults to epsilon
  Rat base = Rat(0);                         // leftmost opinion
  std::optional<std::size_t> size_left;      // two_cluster block sizes
  std::optional<std::size_t> size_right;
  std::uint64_t seed = 0;
  std::uint64_t max_denominator = 1'000'000;  // uniform_random denominators
  std::string path;                           // from_file
};

// Builds the profile described by spec. Throws std::invalid_argument on bad
// parameters (non-positive epsilon or spacing, sizes that do not add up,
// dumbbell with n < 3, ...).
OpinionProfile generate(const InstanceSpec& spec);

// Reads a profile from JSON: {"epsilon": "<rational>", "opinions": [...]}.
// Opinions arriving out of order are sorted; *reordered reports whether that
// happened (a warning also goes to stderr). Throws std::invalid_argument on
// malformed input.
OpinionProfile ingest(std::istream& in, bool* reordered = nullptr);
OpinionProfile ingest_file(const std::string& path, bool* reordered = nullptr);

}  // namespace hk
