#include "hermitex/ring.hpp"

#include <mpfr.h>

#include <cmath>
#include <string>

#include "hermitex/error.hpp"

namespace hermitex {

std::string_view to_string(CoefficientRing ring) {
  switch (ring) {
    case CoefficientRing::rational:
      return "RATIONAL";
    case CoefficientRing::complex_rational:
      return "COMPLEX_RATIONAL";
    case CoefficientRing::float64:
      return "FLOAT64";
    case CoefficientRing::complex_float64:
      return "COMPLEX_FLOAT64";
  }
  return "UNKNOWN";
}

ComplexRational ComplexRational::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw DomainError("division by zero in complex rational arithmetic");
  return {Rational(re_ / norm), Rational(-im_ / norm)};
}

double to_double(const Rational& q) {
  mpfr_t r;
  mpfr_init2(r, 53);
  mpfr_set_q(r, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(r, MPFR_RNDN);
  mpfr_clear(r);
  if (!std::isfinite(d)) {
    throw RangeError("rational magnitude exceeds the float64 range (" +
                     std::to_string(mpz_sizeinbase(q.get_num_mpz_t(), 2)) + "-bit numerator, " +
                     std::to_string(mpz_sizeinbase(q.get_den_mpz_t(), 2)) + "-bit denominator)");
  }
  return d;
}

Complex to_complex(const ComplexRational& z) { return {to_double(z.real()), to_double(z.imag())}; }

Rational from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value has no rational representation");
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

}  // namespace hermitex
