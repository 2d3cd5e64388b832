#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace killing {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always "num/den", including integers ("3/1").
std::string to_fraction_string(const Rational& value);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace killing
