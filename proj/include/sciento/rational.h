#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sciento {

// Exact arithmetic for penetration coordinates and scores. Denominators stay
// bounded by (distinct citing authors) * (last non-zero coordinate).
// Compare against Rational or std::int64_t, not a bare int literal: under
// C++20 boost's mixed operator== recurses for other integer types.
using Rational = boost::rational<std::int64_t>;

// "16/7", or "3" when the value is integral.
std::string to_fraction_string(const Rational& value);

// Accepts "p/q", "p" and optional leading '-'. Throws ParseError.
Rational parse_fraction(std::string_view text);

// Fixed-point rendering with `places` digits, truncated toward zero
// (16/7 -> "2.28").
std::string to_decimal_string(const Rational& value, int places = 2);

}  // namespace sciento
