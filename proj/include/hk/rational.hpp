#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hk {

// Exact rational scalar. gmpxx keeps arithmetic results canonical (reduced,
// positive denominator), so == and < are exact value comparisons.
using Rat = mpq_class;

// Parses "p/q", an integer, or a finite decimal ("-3.25", ".5") exactly.
// No whitespace, no exponents. Throws std::invalid_argument otherwise.
Rat parse_rational(std::string_view text);

// Inverse of parse_rational: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& value);

double to_double(const Rat& value);

}  // namespace hk
