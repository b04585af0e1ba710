#pragma once

#include <optional>
#include <utility>

#include "params.hpp"
#include "rational.hpp"

namespace fracmeas {

// Canonical exact representation of the value p / L^s, where p counts
// level-k pieces of mass n^{-k} and L is a diameter in units of l^{-k}.
// The represented value is independent of k because (l^k)^s = n^k, and the
// canonical form divides out common (n, l) factors.
struct Density {
  Integer p;
  Integer L;

  bool operator==(const Density& other) const {
    return p == other.p && L == other.L;
  }
};

// Canonicalizing constructor: while n | p and l | L, replace (p, L) by
// (p/n, L/l).  Idempotent.  Requires p >= 1, L >= 1.
Density make_density(const Params& params, Integer p, Integer L);
Density canonicalize(const Params& params, const Density& d);

enum class Order { less, equal, greater };

struct ComparisonOutcome {
  Order ordering;
  // Bits of interval arithmetic consumed; 0 when the comparison was decided
  // by integer reasoning alone (equality is only ever reported that way).
  int precision_bits_used;
  bool certified;
};

// Total comparison of two density values with the same parameters.  Decides
// algebraically where possible (identical canonical pairs, one-sided
// dominance, ratios that are exact powers of n or l, multiplicative
// dependence of n and l); otherwise brackets the sign of
// log(p1/p2) - s*log(L1/L2) at escalating precision.  Throws
// PrecisionExhausted past the configured cap.
ComparisonOutcome density_compare(const Params& params, const Density& a,
                                  const Density& b);

// Same comparison for general positive rational (mass, diameter) pairs:
// compares mu1/len1^s against mu2/len2^s.
ComparisonOutcome density_value_compare(const Params& params,
                                        const Rational& mu1,
                                        const Rational& len1,
                                        const Rational& mu2,
                                        const Rational& len2);

// x^s when it is provably rational: x = 1, x an exact power of l (then
// x^s is the matching power of n), or, under multiplicative dependence
// s = a/b, any x that is a perfect b-th power of a rational.
std::optional<Rational> try_exact_pow_s(const Params& params,
                                        const Rational& x);

// Certified bracket lo <= x^s <= hi with hi - lo <= 2^-bits * x^s.
// Successive targets produce nested (non-widening) brackets.
std::pair<Rational, Rational> pow_s_bracket(const Params& params,
                                            const Rational& x, int bits);

// Bracket of s = log n / log l itself, relative width <= 2^-bits.
std::pair<Rational, Rational> s_bracket(const Params& params, int bits);

// Bracket of the value mu / len^s.
std::pair<Rational, Rational> density_value_bracket(const Params& params,
                                                    const Rational& mu,
                                                    const Rational& len,
                                                    int bits);

inline std::pair<Rational, Rational> density_value_bracket(
    const Params& params, const Density& d, int bits) {
  return density_value_bracket(params, Rational(d.p), Rational(d.L), bits);
}

}  // namespace fracmeas
