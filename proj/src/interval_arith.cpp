#include "interval_arith.hpp"

#include <algorithm>

#include "errors.hpp"

namespace fracmeas {

FloatInterval::FloatInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_nan(lo_);
  mpfr_set_nan(hi_);
}

FloatInterval::FloatInterval(const FloatInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

FloatInterval::FloatInterval(FloatInterval&& other) noexcept
    : prec_(other.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

FloatInterval& FloatInterval::operator=(const FloatInterval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

FloatInterval& FloatInterval::operator=(FloatInterval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

FloatInterval::~FloatInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

FloatInterval FloatInterval::from(const Rational& q, mpfr_prec_t prec) {
  FloatInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::from(const Integer& z, mpfr_prec_t prec) {
  FloatInterval r(prec);
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::add(const FloatInterval& o) const {
  FloatInterval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::sub(const FloatInterval& o) const {
  FloatInterval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::mul(const FloatInterval& o) const {
  FloatInterval r(std::max(prec_, o.prec_));
  // min/max over the four endpoint products, each with directed rounding.
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

FloatInterval FloatInterval::div(const FloatInterval& o) const {
  if (o.sign() == 0)
    throw InvalidArgument("interval division by an interval containing zero");
  FloatInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

FloatInterval FloatInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw InvalidArgument("interval log of nonpositive");
  FloatInterval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::exp() const {
  FloatInterval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::intersect(const FloatInterval& o) const {
  FloatInterval r(std::max(prec_, o.prec_));
  mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) >= 0 ? lo_ : o.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) <= 0 ? hi_ : o.hi_, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0)
    throw CheckFailed("disjoint enclosures of one value");
  return r;
}

int FloatInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw CheckFailed("non-finite interval endpoint");
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational q(mant);
  if (e >= 0) {
    q *= Rational(ipow(Integer(2), static_cast<unsigned long>(e)));
  } else {
    q /= Rational(ipow(Integer(2), static_cast<unsigned long>(-e)));
  }
  q.canonicalize();
  return q;
}

}  // namespace

Rational FloatInterval::lower() const { return mpfr_to_rational(lo_); }

Rational FloatInterval::upper() const { return mpfr_to_rational(hi_); }

}  // namespace fracmeas
