#include "hk/generators.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

#include "hk/io.hpp"

namespace hk {
namespace {

// Uniform integer in [0, bound] assembled from 64-bit words with rejection,
// so results depend only on the mt19937_64 stream.
mpz_class uniform_below(std::mt19937_64& rng, const mpz_class& bound) {
  if (bound == 0) return 0;
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    mpz_class value = 0;
    for (std::size_t w = 0; w < words; ++w) {
      value <<= 64;
      mpz_class word;
      mpz_import(word.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                 &(const std::uint64_t&)std::as_const(*new std::uint64_t(0)));
      value += word;
    }
    value >>= words * 64 - bits;
    if (value <= bound) return value;
  }
}

mpz_class floor_of(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return q;
}

}  // namespace

const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::UniformRandom: return "uniform_random";
    case InstanceKind::Equidistant: return "equidistant";
    case InstanceKind::TwoCluster: return "two_cluster";
    case InstanceKind::Dumbbell: return "dumbbell";
    case InstanceKind::FromFile: return "from_file";
  }
  return "?";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  if (name == "uniform_random") return InstanceKind::UniformRandom;
  if (name == "equidistant") return InstanceKind::Equidistant;
  if (name == "two_cluster") return InstanceKind::TwoCluster;
  if (name == "dumbbell") return InstanceKind::Dumbbell;
  if (name == "from_file") return InstanceKind::FromFile;
  return std::nullopt;
}

OpinionProfile generate(const InstanceSpec& spec) {
  if (spec.kind == InstanceKind::FromFile) return ingest_file(spec.path);

  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (spec.epsilon <= 0)
    throw std::invalid_argument("generate: epsilon must be > 0");

  std::vector<Rat> xs;
  xs.reserve(spec.n);

  switch (spec.kind) {
    case InstanceKind::Equidistant: {
      const Rat spacing = spec.spacing.value_or(spec.epsilon);
      if (spacing < 0)
        throw std::invalid_argument("generate: negative spacing");
      for (std::size_t i = 0; i < spec.n; ++i)
        xs.push_back(spec.base + Rat(static_cast<unsigned long>(i)) * spacing);
      break;
    }
    case InstanceKind::TwoCluster: {
      const Rat gap = spec.gap.value_or(spec.epsilon);
      if (gap < 0) throw std::invalid_argument("generate: negative gap");
      const std::size_t left = spec.size_left.value_or((spec.n + 1) / 2);
      const std::size_t right = spec.size_right.value_or(spec.n - left);
      if (left + right != spec.n || left == 0 || right == 0)
        throw std::invalid_argument("generate: cluster sizes must add up to n");
      xs.assign(left, spec.base);
      xs.insert(xs.end(), right, spec.base + gap);
      break;
    }
    case InstanceKind::Dumbbell: {
      if (spec.n < 3)
        throw std::invalid_argument("generate: dumbbell needs n >= 3");
      const Rat gap = spec.gap.value_or(spec.epsilon);
      if (gap <= 0) throw std::invalid_argument("generate: gap must be > 0");
      const std::size_t left = (spec.n - 1) / 2;
      const std::size_t right = spec.n - 1 - left;
      xs.assign(left, spec.base);
      xs.push_back(spec.base + gap);
      xs.insert(xs.end(), right, spec.base + gap + gap);
      break;
    }
    case InstanceKind::UniformRandom: {
      if (spec.max_denominator < 1)
        throw std::invalid_argument("generate: max denominator must be >= 1");
      std::mt19937_64 rng(spec.seed);
      const Rat range = Rat(static_cast<unsigned long>(spec.n)) * spec.epsilon;
      for (std::size_t i = 0; i < spec.n; ++i) {
        const mpz_class den =
            1 + uniform_below(rng, mpz_class(spec.max_denominator - 1));
        const mpz_class num = uniform_below(rng, floor_of(range * Rat(den)));
        Rat x(num, den);
        x.canonicalize();
        xs.push_back(spec.base + x);
      }
      std::sort(xs.begin(), xs.end());
      break;
    }
    case InstanceKind::FromFile:
      break;  // handled above
  }

  return make_profile(spec.epsilon, std::move(xs));
}

OpinionProfile ingest(std::istream& in, bool* reordered) {
  return read_profile_json(in, reordered);
}

OpinionProfile ingest_file(const std::string& path, bool* reordered) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile file: " + path);
  return ingest(in, reordered);
}

}  // namespace hk
