#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bifree {

// Exact rationals; every identity in this library is checked with zero tolerance.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with q > 0. Result is canonical.
Rational parse_rational(std::string_view text);

// Canonical text: "p/q" with gcd 1 and q > 0, or plain "p" for integers.
std::string to_string(const Rational& value);

}  // namespace bifree
