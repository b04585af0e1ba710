#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fracmeas {

using Integer = mpz_class;

// Exact rational scalar.  mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need; every
// arithmetic operation is exact.
using Rational = mpq_class;

// Accepts "p/q", an integer, or a plain decimal like "0.25" (converted
// exactly).  Throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is one.
std::string rational_string(const Rational& q);

enum class RoundDir { down, up };

// Decimal rendering of q with `digits` fractional digits, rounded in the
// requested direction.  Exact integer arithmetic; no floating point.
std::string decimal_string(const Rational& q, int digits, RoundDir dir);

Integer ipow(const Integer& base, unsigned long exp);
Integer ipow(long base, unsigned long exp);

// Smallest j >= 0 with value | base^j, if one exists (i.e. every prime of
// `value` divides `base`).  Requires value >= 1, base >= 2.
std::optional<unsigned> smooth_exponent(const Integer& value,
                                        const Integer& base);

// e >= 0 with x == base^e, if x is an exact power of base.  Requires x >= 1,
// base >= 2.
std::optional<unsigned> power_exponent(const Integer& x, const Integer& base);

// e (possibly negative) with x == base^e for a rational x > 0, if any.
std::optional<long> rational_power_exponent(const Rational& x,
                                            const Integer& base);

// q^e for integer e of either sign (q > 0 when e < 0).
Rational rational_pow(const Rational& q, long e);

}  // namespace fracmeas
