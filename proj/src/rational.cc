#include "sciento/rational.h"

#include <charconv>
#include <cstdlib>
#include <string>

#include "sciento/error.h"

namespace sciento {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(0, "malformed fraction '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string to_fraction_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

Rational parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_decimal_string(const Rational& value, int places) {
  std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  std::string out = negative ? "-" : "";
  out += std::to_string(num / den);
  std::int64_t rem = num % den;
  if (places > 0) {
    out += '.';
    for (int i = 0; i < places; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + rem / den);
      rem %= den;
    }
  }
  // "-0.00" reads badly; truncation of a small negative value lands here.
  if (negative && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

}  // namespace sciento
