#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace linerig {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or an integer string; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always "num/den", with den = 1 for integers.
std::string format_rational(const Rational& q);

}  // namespace linerig
