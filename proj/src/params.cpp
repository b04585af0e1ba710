#include "params.hpp"

#include <string>

#include "errors.hpp"

namespace fracmeas {

namespace {

std::optional<MultDep> detect_mult_dep(std::int64_t n, std::int64_t l) {
  Integer nz(static_cast<long>(n)), lz(static_cast<long>(l));
  // Scan candidate exponents for n ascending; the first root that also
  // generates l gives the largest common base m.
  for (unsigned a = 1; (Integer(1) << a) <= nz; ++a) {
    Integer m;
    if (a == 1) {
      m = nz;
    } else {
      mpz_root(m.get_mpz_t(), nz.get_mpz_t(), a);
      if (ipow(m, a) != nz) continue;
    }
    if (m < 2) continue;
    if (auto b = power_exponent(lz, m)) {
      return MultDep{m, a, *b};
    }
  }
  return std::nullopt;
}

}  // namespace

Params::Params(std::int64_t n, std::int64_t l) : n_(n), l_(l) {
  if (n < 2 || l <= n)
    throw InvalidArgument("require l > n >= 2 (got n=" + std::to_string(n) +
                          ", l=" + std::to_string(l) + ")");
  r_ = Rational(static_cast<long>(n - 1), static_cast<long>(l - 1));
  r_.canonicalize();
  dep_ = detect_mult_dep(n, l);
}

void Params::set_precision_cap(int bits) {
  if (bits < 2) throw InvalidArgument("precision cap must be >= 2 bits");
  prec_.cap_bits = bits;
}

void Params::set_enumeration_limit(std::int64_t max_intervals) {
  if (max_intervals < 2) throw InvalidArgument("enumeration limit too small");
  enum_limit_ = max_intervals;
}

std::int64_t Params::level_count(int k) const {
  if (k < 0) throw InvalidArgument("negative level");
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    if (count > enum_limit_ / n_)
      throw ResourceLimit("n^k exceeds enumeration limit at level " +
                          std::to_string(k));
    count *= n_;
  }
  return count;
}

int Params::max_level_within(std::int64_t budget) const {
  std::int64_t count = 1;
  int k = 0;
  while (count <= budget / n_ && count * n_ <= enum_limit_) {
    count *= n_;
    ++k;
  }
  return k;
}

}  // namespace fracmeas
