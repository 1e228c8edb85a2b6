#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace stmodal {

using Rational = mpq_class;

/// Parses "3", "-3/4", "+1/2". Throws std::invalid_argument on anything else (zero denominators included).
Rational parse_rational(std::string_view s);

/// Canonical form: "n" or "n/d" in lowest terms.
std::string to_string(const Rational& q);

/// floor(q) as a rational integer.
Rational floor(const Rational& q);

/// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view s);

} // namespace stmodal
