#include "measure.hpp"

#include <map>
#include <vector>

#include "errors.hpp"

namespace fracmeas {

Rational cdf(const Params& params, const Rational& x) {
  if (x < 0 || x > 1) throw InvalidArgument("cdf argument outside [0,1]");
  if (sgn(x) == 0) return Rational(0);
  if (x >= params.r()) return Rational(1);

  const long n = static_cast<long>(params.n());
  const long l = static_cast<long>(params.l());
  const Rational inv_n(1, n);

  // Emit base-l digits of x.  Digits < n accumulate d * n^-j; the first
  // digit >= n means the whole tail from position j onward lies past the
  // restricted set, contributing n^-(j-1).  Rational states repeat, so a
  // revisited state closes a cycle; its tail value G solves
  // G = B + n^-(t-m) G exactly.
  std::map<Rational, size_t> seen;
  std::vector<Rational> acc_at{Rational(0)};
  Rational state = x;
  Rational acc = 0;
  Rational npow = 1;  // n^-(digits emitted)
  for (;;) {
    if (sgn(state) == 0) return acc;  // terminating expansion
    auto [it, fresh] = seen.emplace(state, acc_at.size() - 1);
    if (!fresh) {
      const size_t m = it->second;
      const size_t t = acc_at.size() - 1;
      Rational period_mass = (acc - acc_at[m]) * rational_pow(Rational(n), static_cast<long>(m));
      Rational shrink = rational_pow(Rational(n), -static_cast<long>(t - m));
      Rational tail = period_mass / (1 - shrink);
      Rational f = acc_at[m] + rational_pow(Rational(n), -static_cast<long>(m)) * tail;
      f.canonicalize();
      return f;
    }
    state *= l;
    Integer digit;
    mpz_fdiv_q(digit.get_mpz_t(), state.get_num().get_mpz_t(),
               state.get_den().get_mpz_t());
    state -= Rational(digit);
    state.canonicalize();
    if (digit >= n) {
      Rational f = acc + npow;
      f.canonicalize();
      return f;
    }
    npow *= inv_n;
    acc += Rational(digit) * npow;
    acc.canonicalize();
    acc_at.push_back(acc);
  }
}

Rational measure_interval(const Params& params, const Rational& a,
                          const Rational& b) {
  if (a > b) throw InvalidArgument("measure_interval requires a <= b");
  return cdf(params, b) - cdf(params, a);
}

Rational measure_union(const Params& params, const IntervalUnion& u) {
  Rational m(static_cast<long>(u.indices.size()));
  m /= Rational(ipow(params.n(), static_cast<unsigned long>(u.level)));
  m.canonicalize();
  return m;
}

std::optional<Density> exact_density_from(const Params& params,
                                          const Rational& measure,
                                          const Rational& length) {
  if (measure <= 0 || length <= 0) return std::nullopt;
  auto jl = smooth_exponent(length.get_den(), Integer(static_cast<long>(params.l())));
  auto jn = smooth_exponent(measure.get_den(), Integer(static_cast<long>(params.n())));
  if (!jl || !jn) return std::nullopt;
  unsigned j = std::max(*jl, *jn);
  Rational p = measure * Rational(ipow(params.n(), j));
  Rational L = length * Rational(ipow(params.l(), j));
  p.canonicalize();
  L.canonicalize();
  if (p.get_den() != 1 || L.get_den() != 1) return std::nullopt;
  return make_density(params, p.get_num(), L.get_num());
}

DensityQuery density_of(const Params& params, const IntervalUnion& u) {
  DensityQuery q;
  q.measure = measure_union(params, u);
  q.length = u.right - u.left;
  q.length.canonicalize();
  // Unions of basic intervals always have an exact pair: the index count
  // over the scaled hull.
  Integer p(static_cast<long>(u.indices.size()));
  Integer L = left_scaled(params, u.indices.back(), u.level) + 1 -
              left_scaled(params, u.indices.front(), u.level);
  q.exact = make_density(params, p, L);
  return q;
}

DensityQuery density_of(const Params& params, const Rational& a,
                        const Rational& b) {
  if (a < 0 || b > 1 || a > b) throw InvalidArgument("interval outside [0,1]");
  if (a == b) throw InvalidArgument("zero-length set has no density");
  DensityQuery q;
  q.measure = measure_interval(params, a, b);
  q.length = b - a;
  q.length.canonicalize();
  q.exact = exact_density_from(params, q.measure, q.length);
  return q;
}

}  // namespace fracmeas
