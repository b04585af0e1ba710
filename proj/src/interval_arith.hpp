#pragma once

#include <mpfr.h>

#include "rational.hpp"

namespace fracmeas {

// A closed interval [lo, hi] of MPFR floats with outward rounding on every
// operation, so the true real result is always contained.  Used only to
// separate or bracket quantities; all decisions taken on intervals are
// therefore certified.
class FloatInterval {
 public:
  explicit FloatInterval(mpfr_prec_t prec);
  FloatInterval(const FloatInterval& other);
  FloatInterval(FloatInterval&& other) noexcept;
  FloatInterval& operator=(const FloatInterval& other);
  FloatInterval& operator=(FloatInterval&& other) noexcept;
  ~FloatInterval();

  static FloatInterval from(const Rational& q, mpfr_prec_t prec);
  static FloatInterval from(const Integer& z, mpfr_prec_t prec);

  mpfr_prec_t precision() const noexcept { return prec_; }

  FloatInterval add(const FloatInterval& o) const;
  FloatInterval sub(const FloatInterval& o) const;
  FloatInterval mul(const FloatInterval& o) const;
  FloatInterval div(const FloatInterval& o) const;  // o must not straddle 0
  FloatInterval log() const;                        // requires lo > 0
  FloatInterval exp() const;

  // Intersection of two enclosures of the same real value.
  FloatInterval intersect(const FloatInterval& o) const;

  // +1 when the whole interval is > 0, -1 when < 0, 0 when it straddles.
  int sign() const;

  // Exact conversions of the endpoints.
  Rational lower() const;
  Rational upper() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

}  // namespace fracmeas
