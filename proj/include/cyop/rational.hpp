#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyop {

// Exact arithmetic base types. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the Rational contract we need.
using Int = mpz_class;
using Rational = mpq_class;

struct CyopError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CYOP_ERROR(Name)                     \
  struct Name : CyopError {                  \
    Name(const std::string& msg = #Name) : CyopError(msg) {} \
  }

CYOP_ERROR(ZeroConstantTerm);
CYOP_ERROR(BadConstantTerm);
CYOP_ERROR(NonzeroInnerConstant);
CYOP_ERROR(NotInvertible);
CYOP_ERROR(NotAnExactRoot);
CYOP_ERROR(NotMUM);
CYOP_ERROR(SingularRecursion);
CYOP_ERROR(ShapeMismatch);
CYOP_ERROR(UnknownCase);
CYOP_ERROR(NoClosedFormSequence);
CYOP_ERROR(NonExpandablePrefactor);
CYOP_ERROR(FractionalPowersPresent);
CYOP_ERROR(ParameterPole);
CYOP_ERROR(DegenerateLeading);
CYOP_ERROR(InsufficientLength);
CYOP_ERROR(ParseError);
CYOP_ERROR(NotASymmetricSquare);

#undef CYOP_ERROR

struct SingularStep : CyopError {
  long step;
  explicit SingularStep(long n)
      : CyopError("SingularStep at n=" + std::to_string(n)), step(n) {}
};

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Int ipow(const Int& base, unsigned long e);
Rational rpow(const Rational& base, long e);

Int factorial(unsigned long n);
Int lcm_upto(unsigned long n);

// Binomial coefficient with the usual conventions: zero for k < 0 and, for
// integer tops, zero when k > top.
Int binomial(const Int& n, long k);
// Generalized binomial (a over k) for rational a.
Rational binomial(const Rational& a, long k);
// Pochhammer symbol (a)_k.
Rational pochhammer(const Rational& a, long k);

// Parses "p/q", "p", or a plain decimal string like "-1.25" (exact).
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

// Decimal rendering of |r| truncated to `digits` fractional digits (exact
// long division; no floating point).
std::string decimal_string(const Rational& r, int digits);

// Primes p <= limit dividing n; if a cofactor > limit remains it is appended
// verbatim (it may be composite).
std::vector<Int> prime_support(const Int& n, unsigned long limit = 1000000);

}  // namespace cyop
