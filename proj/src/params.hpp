#pragma once

#include <cstdint>
#include <optional>

#include "rational.hpp"

namespace fracmeas {

struct PrecisionPolicy {
  int start_bits = 128;
  int cap_bits = 4096;
};

// Multiplicative dependence n = m^a, l = m^b with the largest possible m.
// When it exists, s = log n / log l = a/b is rational and every density
// comparison is decidable in integer arithmetic.
struct MultDep {
  Integer m;
  unsigned a = 0;
  unsigned b = 0;
};

// The pair (n, l) defining the digit-restricted set: numbers in [0,1] whose
// base-l digits all lie in {0, ..., n-1}.  Derived constants:
//   s = log n / log l   (kept symbolic; bracketed on demand, never a float)
//   r = (n-1)/(l-1)     (supremum and diameter of the set)
class Params {
 public:
  Params(std::int64_t n, std::int64_t l);  // requires l > n >= 2

  std::int64_t n() const noexcept { return n_; }
  std::int64_t l() const noexcept { return l_; }
  const Rational& r() const noexcept { return r_; }
  Rational contraction() const { return Rational(1, l_); }

  const std::optional<MultDep>& mult_dep() const noexcept { return dep_; }

  const PrecisionPolicy& precision() const noexcept { return prec_; }
  void set_precision_cap(int bits);
  void set_enumeration_limit(std::int64_t max_intervals);
  std::int64_t enumeration_limit() const noexcept { return enum_limit_; }

  // n^k as int64; throws ResourceLimit past the enumeration budget.
  std::int64_t level_count(int k) const;
  // Largest k with n^k <= budget (and within the enumeration limit).
  int max_level_within(std::int64_t budget) const;

 private:
  std::int64_t n_;
  std::int64_t l_;
  Rational r_;
  PrecisionPolicy prec_;
  std::int64_t enum_limit_ = std::int64_t{1} << 26;
  std::optional<MultDep> dep_;
};

}  // namespace fracmeas
