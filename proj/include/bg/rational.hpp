#ifndef BG_RATIONAL_HPP
#define BG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bg {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'). Decimal points, exponents and
/// zero denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

enum class DecimalMode { round_half_up, truncate };

/// Fixed-point rendering with `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits, DecimalMode mode = DecimalMode::round_half_up);

/// Scientific rendering with `significant` digits, e.g. "6.14e-06".
std::string to_scientific(const Rational& q, int significant);

}  // namespace bg

#endif  // BG_RATIONAL_HPP
