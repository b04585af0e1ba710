#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace fracmeas {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw InvalidArgument("malformed rational literal");

  std::string body(text);
  Rational result;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InvalidArgument("malformed rational literal: " + body);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw InvalidArgument("zero denominator: " + body);
    result = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw InvalidArgument("malformed decimal literal: " + body);
    Integer scaled(ip + fp, 10);
    result = Rational(scaled, ipow(Integer(10), fp.size()));
  } else {
    if (!all_digits(body))
      throw InvalidArgument("malformed rational literal: " + body);
    result = Rational(Integer(body, 10));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string rational_string(const Rational& q) {
  return q.get_str();
}

std::string decimal_string(const Rational& q, int digits, RoundDir dir) {
  if (digits < 0) throw InvalidArgument("negative digit count");
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  Integer scaled_num = q.get_num() * scale;
  Integer units;
  if (dir == RoundDir::down) {
    mpz_fdiv_q(units.get_mpz_t(), scaled_num.get_mpz_t(),
               q.get_den().get_mpz_t());
  } else {
    mpz_cdiv_q(units.get_mpz_t(), scaled_num.get_mpz_t(),
               q.get_den().get_mpz_t());
  }
  bool negative = units < 0;
  Integer mag = abs(units);
  Integer ip = mag / scale;
  Integer fp = mag % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  std::string out = negative ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    out += '.';
    out += frac;
  }
  return out;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer ipow(long base, unsigned long exp) {
  return ipow(Integer(base), exp);
}

std::optional<unsigned> smooth_exponent(const Integer& value,
                                        const Integer& base) {
  if (value < 1 || base < 2) throw InvalidArgument("smooth_exponent domain");
  Integer v = value;
  unsigned j = 0;
  while (v != 1) {
    Integer g = gcd(v, base);
    if (g == 1) return std::nullopt;
    v /= g;
    ++j;
  }
  return j;
}

std::optional<unsigned> power_exponent(const Integer& x, const Integer& base) {
  if (x < 1 || base < 2) throw InvalidArgument("power_exponent domain");
  Integer v = x;
  unsigned e = 0;
  while (v != 1) {
    if (v % base != 0) return std::nullopt;
    v /= base;
    ++e;
  }
  return e;
}

std::optional<long> rational_power_exponent(const Rational& x,
                                            const Integer& base) {
  if (x <= 0) throw InvalidArgument("rational_power_exponent domain");
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (den == 1) {
    if (auto e = power_exponent(num, base)) return static_cast<long>(*e);
    return std::nullopt;
  }
  if (num == 1) {
    if (auto e = power_exponent(den, base)) return -static_cast<long>(*e);
    return std::nullopt;
  }
  return std::nullopt;
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), mag);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), mag);
  r.canonicalize();
  if (e < 0) {
    if (q == 0) throw InvalidArgument("rational_pow: 0 to negative power");
    r = 1 / r;
  }
  return r;
}

}  // namespace fracmeas
