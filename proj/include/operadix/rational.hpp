#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace operadix {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p` or `p/q` with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace operadix
