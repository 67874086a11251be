#include "galecross/exactmath.hpp"

#include <algorithm>
#include <cctype>

namespace galecross {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// GMP would read a leading 0 as an octal prefix.
Integer decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string{digits.substr(first)});
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw InputError("malformed rational: '" + std::string(text) + "'");
  const Integer d = decimal(den);
  if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  Integer n = decimal(num);
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace galecross
