#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps every value
// in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace h3l {

using Q = mpq_class;
using Z = mpz_class;

/// Formats as "p/q", or "p" when the denominator is one.
std::string to_string(const Q& q);

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
Q parse_rational(std::string_view text);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

}  // namespace h3l
