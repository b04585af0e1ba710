#include "density.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "errors.hpp"
#include "interval_arith.hpp"

namespace fracmeas {

namespace {

Order order_from_cmp(int c) {
  if (c < 0) return Order::less;
  if (c > 0) return Order::greater;
  return Order::equal;
}

ComparisonOutcome algebraic(Order o) { return {o, 0, true}; }

// Interval enclosure of s = log n / log l at the given working precision.
// Comparisons evaluate this constantly, so enclosures are cached per
// (n, l, precision).
FloatInterval s_interval(const Params& params, mpfr_prec_t prec) {
  thread_local std::map<std::tuple<std::int64_t, std::int64_t, mpfr_prec_t>,
                        FloatInterval>
      cache;
  auto key = std::make_tuple(params.n(), params.l(), prec);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto ln_n = FloatInterval::from(Integer(static_cast<long>(params.n())), prec).log();
  auto ln_l = FloatInterval::from(Integer(static_cast<long>(params.l())), prec).log();
  FloatInterval s = ln_n.div(ln_l);
  cache.emplace(key, s);
  return s;
}

// Sign of log(mu1/mu2) - s * log(len1/len2), bracketed at escalating
// precision.  Only called for values that differ, so separation terminates
// unless the precision cap intervenes first.
ComparisonOutcome numeric_compare(const Params& params, const Rational& mu_ratio,
                                  const Rational& len_ratio) {
  const PrecisionPolicy& policy = params.precision();
  int bits = std::min(policy.start_bits, policy.cap_bits);
  for (;;) {
    FloatInterval s = s_interval(params, bits);
    FloatInterval a = FloatInterval::from(mu_ratio, bits).log();
    FloatInterval b = FloatInterval::from(len_ratio, bits).log();
    FloatInterval d = a.sub(s.mul(b));
    int sign = d.sign();
    if (sign > 0) return {Order::greater, bits, true};
    if (sign < 0) return {Order::less, bits, true};
    if (bits >= policy.cap_bits)
      throw PrecisionExhausted(
          "density comparison undecided at " + std::to_string(bits) + " bits",
          bits);
    bits = std::min(bits * 2, policy.cap_bits);
  }
}

}  // namespace

Density make_density(const Params& params, Integer p, Integer L) {
  if (p < 1 || L < 1) throw InvalidArgument("density pair requires p, L >= 1");
  const Integer n(static_cast<long>(params.n()));
  const Integer l(static_cast<long>(params.l()));
  while (p % n == 0 && L % l == 0) {
    p /= n;
    L /= l;
  }
  return Density{std::move(p), std::move(L)};
}

Density canonicalize(const Params& params, const Density& d) {
  return make_density(params, d.p, d.L);
}

ComparisonOutcome density_value_compare(const Params& params,
                                        const Rational& mu1,
                                        const Rational& len1,
                                        const Rational& mu2,
                                        const Rational& len2) {
  if (mu1 <= 0 || mu2 <= 0 || len1 <= 0 || len2 <= 0)
    throw InvalidArgument("density values require positive mass and diameter");

  const int mu_cmp = cmp(mu1, mu2);
  const int len_cmp = cmp(len1, len2);

  // Equal diameters compare by mass; equal masses compare inversely by
  // diameter; and one-sided dominance needs no numerics at all.
  if (len_cmp == 0) return algebraic(order_from_cmp(mu_cmp));
  if (mu_cmp == 0) return algebraic(order_from_cmp(-len_cmp));
  if (mu_cmp > 0 && len_cmp < 0) return algebraic(Order::greater);
  if (mu_cmp < 0 && len_cmp > 0) return algebraic(Order::less);

  const Rational mu_ratio = mu1 / mu2;
  const Rational len_ratio = len1 / len2;

  // mu1/mu2 = n^j  =>  compare l^j * len2 against len1.
  if (auto j = rational_power_exponent(mu_ratio,
                                       Integer(static_cast<long>(params.n())))) {
    Rational lhs = rational_pow(Rational(static_cast<long>(params.l())), *j) * len2;
    return algebraic(order_from_cmp(cmp(lhs, len1)));
  }
  // len1/len2 = l^j  =>  compare mu1 / n^j against mu2.
  if (auto j = rational_power_exponent(len_ratio,
                                       Integer(static_cast<long>(params.l())))) {
    Rational lhs = mu1 / rational_pow(Rational(static_cast<long>(params.n())), *j);
    return algebraic(order_from_cmp(cmp(lhs, mu2)));
  }
  // Under n = m^a, l = m^b the exponent s equals a/b, so the comparison
  // reduces to the integer identity (mu1/mu2)^b vs (len1/len2)^a.
  if (const auto& dep = params.mult_dep()) {
    Rational lhs = rational_pow(mu_ratio, static_cast<long>(dep->b));
    Rational rhs = rational_pow(len_ratio, static_cast<long>(dep->a));
    return algebraic(order_from_cmp(cmp(lhs, rhs)));
  }

  return numeric_compare(params, mu_ratio, len_ratio);
}

ComparisonOutcome density_compare(const Params& params, const Density& a,
                                  const Density& b) {
  Density ca = canonicalize(params, a);
  Density cb = canonicalize(params, b);
  if (ca == cb) return algebraic(Order::equal);
  return density_value_compare(params, Rational(ca.p), Rational(ca.L),
                               Rational(cb.p), Rational(cb.L));
}

std::optional<Rational> try_exact_pow_s(const Params& params,
                                        const Rational& x) {
  if (x <= 0) throw InvalidArgument("pow_s requires a positive base");
  if (x == 1) return Rational(1);
  if (auto e = rational_power_exponent(x, Integer(static_cast<long>(params.l()))))
    return rational_pow(Rational(static_cast<long>(params.n())), *e);
  if (const auto& dep = params.mult_dep()) {
    // x^(a/b) is rational iff x is a perfect b-th power.
    Integer num_root, den_root;
    if (mpz_root(num_root.get_mpz_t(), x.get_num().get_mpz_t(), dep->b) != 0 &&
        mpz_root(den_root.get_mpz_t(), x.get_den().get_mpz_t(), dep->b) != 0) {
      Rational root(num_root, den_root);
      root.canonicalize();
      return rational_pow(root, static_cast<long>(dep->a));
    }
  }
  return std::nullopt;
}

namespace {

// Shared escalation loop: evaluates `make` at growing precision and
// intersects successive enclosures until the relative width target is met.
template <typename F>
std::pair<Rational, Rational> bracket_to_relative_width(F&& make, int bits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(64, bits + 16));
  Rational lo, hi;
  bool have = false;
  // 2^-bits as an exact rational threshold.
  Rational tol(Integer(1), ipow(Integer(2), static_cast<unsigned long>(bits)));
  for (int round = 0; round < 64; ++round) {
    FloatInterval v = make(prec);
    Rational nlo = v.lower();
    Rational nhi = v.upper();
    if (have) {
      // Enclosures of the same value may only tighten.
      if (nlo < lo) nlo = lo;
      if (nhi > hi) nhi = hi;
      if (nlo > nhi) throw CheckFailed("disjoint successive enclosures");
    }
    lo = nlo;
    hi = nhi;
    have = true;
    if (lo > 0 && hi - lo <= tol * lo) return {lo, hi};
    prec *= 2;
  }
  throw CheckFailed("bracket failed to converge");
}

}  // namespace

std::pair<Rational, Rational> pow_s_bracket(const Params& params,
                                            const Rational& x, int bits) {
  if (x <= 0) throw InvalidArgument("pow_s requires a positive base");
  if (bits < 1) throw InvalidArgument("bracket width target must be >= 1 bit");
  if (auto exact = try_exact_pow_s(params, x)) return {*exact, *exact};
  return bracket_to_relative_width(
      [&](mpfr_prec_t prec) {
        FloatInterval s = s_interval(params, prec);
        FloatInterval lx = FloatInterval::from(x, prec).log();
        return s.mul(lx).exp();
      },
      bits);
}

std::pair<Rational, Rational> s_bracket(const Params& params, int bits) {
  if (bits < 1) throw InvalidArgument("bracket width target must be >= 1 bit");
  if (const auto& dep = params.mult_dep()) {
    Rational s(static_cast<long>(dep->a), static_cast<long>(dep->b));
    return {s, s};
  }
  return bracket_to_relative_width(
      [&](mpfr_prec_t prec) { return s_interval(params, prec); }, bits);
}

std::pair<Rational, Rational> density_value_bracket(const Params& params,
                                                    const Rational& mu,
                                                    const Rational& len,
                                                    int bits) {
  if (mu <= 0 || len <= 0)
    throw InvalidArgument("density value requires positive mass and diameter");
  if (auto exact = try_exact_pow_s(params, len)) {
    Rational v = mu / *exact;
    return {v, v};
  }
  return bracket_to_relative_width(
      [&](mpfr_prec_t prec) {
        FloatInterval s = s_interval(params, prec);
        FloatInterval llen = FloatInterval::from(len, prec).log();
        FloatInterval lmu = FloatInterval::from(mu, prec).log();
        return lmu.sub(s.mul(llen)).exp();
      },
      bits);
}

}  // namespace fracmeas
