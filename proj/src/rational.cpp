#include "cyop/rational.hpp"

#include <algorithm>

namespace cyop {

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (cyop::is_zero(base)) throw ZeroConstantTerm("rpow: zero base with negative exponent");
    return rpow(Rational(1) / base, -e);
  }
  Rational num(ipow(Int(base.get_num()), static_cast<unsigned long>(e)),
               ipow(Int(base.get_den()), static_cast<unsigned long>(e)));
  num.canonicalize();
  return num;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int lcm_upto(unsigned long n) {
  Int r = 1;
  for (unsigned long k = 2; k <= n; ++k) {
    Int kk(static_cast<long>(k));
    mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), kk.get_mpz_t());
  }
  return r;
}

Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && Int(k) > n) return 0;
  // mpz_bin_ui handles negative tops with the standard extension.
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return 0;
  Rational num = 1;
  for (long i = 0; i < k; ++i) num *= (a - i);
  Rational r = num / Rational(factorial(static_cast<unsigned long>(k)));
  r.canonicalize();
  return r;
}

Rational pochhammer(const Rational& a, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (a + i);
  return r;
}

Rational parse_rational(const std::string& s) {
  auto fail = [&]() { throw ParseError("bad rational literal: " + s); };
  if (s.empty()) fail();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      Rational r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
      if (r.get_den() == 0) fail();
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      fail();
    }
  }
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) return Rational(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    unsigned long frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") fail();
    Rational r(Int(digits), ipow(Int(10), frac));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail();
  }
  return 0;  // unreachable
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string decimal_string(const Rational& r, int digits) {
  Int num = abs(Int(r.get_num()));
  Int den = r.get_den();
  Int ip = num / den;
  Int rem = num - ip * den;
  std::string out = (sgn(r) < 0 ? "-" : "") + ip.get_str();
  if (digits <= 0) return out;
  out += ".";
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    Int d = rem / den;
    rem -= d * den;
    out += d.get_str();
  }
  return out;
}

std::vector<Int> prime_support(const Int& n, unsigned long limit) {
  std::vector<Int> out;
  Int m = abs(n);
  if (m <= 1) return out;
  for (unsigned long p = 2; Int(p) * Int(p) <= m && p <= limit; p = (p == 2 ? 3 : p + 2)) {
    if (m % p == 0) {
      out.push_back(Int(static_cast<long>(p)));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace cyop
