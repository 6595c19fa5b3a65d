#pragma once

#include <string>
#include <string_view>

#include "hermitex/any_polynomial.hpp"
#include "hermitex/polynomial.hpp"

namespace hermitex {

// Text form: ascending coefficients separated by commas. Rationals are "a"
// or "a/b", complex rationals "a/b+c/di", floats use 17 significant digits.
// The zero polynomial is written "0". U+2212 is accepted as a minus sign.

std::string format_scalar(const Rational& q);
std::string format_scalar(const ComplexRational& z);
std::string format_scalar(double v);
std::string format_scalar(const Complex& z);
std::string format_scalar(const Scalar& s);

template <Ring T>
std::string format_polynomial(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ", ";
    out += format_scalar(c);
  }
  return out;
}

std::string format_polynomial(const AnyPolynomial& p);

/// Parses `text` into a normalized polynomial over `ring`. Throws ParseError
/// naming the 1-based token for malformed input or a zero denominator.
AnyPolynomial parse_polynomial(std::string_view text, CoefficientRing ring);

/// Picks COMPLEX_RATIONAL when any token carries an imaginary unit, else RATIONAL.
CoefficientRing detect_exact_ring(std::string_view text);

Rational parse_rational(std::string_view token, std::size_t position = 0);
ComplexRational parse_complex_rational(std::string_view token, std::size_t position = 0);
double parse_float(std::string_view token, std::size_t position = 0);
Complex parse_complex_float(std::string_view token, std::size_t position = 0);

}  // namespace hermitex
