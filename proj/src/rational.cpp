#include "hk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hk {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad(text);

  mpz_class num, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad(text);
    num = mpz_class(std::string(p));
    den = mpz_class(std::string(q));
    if (den == 0) bad(text);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad(text);
    if (!ip.empty() && !all_digits(ip)) bad(text);
    if (!fp.empty() && !all_digits(fp)) bad(text);
    std::string digits;
    digits.reserve(ip.size() + fp.size());
    digits.append(ip).append(fp);
    num = mpz_class(digits);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  } else {
    if (!all_digits(body)) bad(text);
    num = mpz_class(std::string(body));
    den = 1;
  }
  if (negative) num = -num;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

double to_double(const Rat& value) { return value.get_d(); }

}  // namespace hk
