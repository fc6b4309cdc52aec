#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace border3 {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace; the result is
// canonicalized. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

bool is_zero(const Vector& v);

}  // namespace border3
