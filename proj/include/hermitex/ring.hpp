#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <string_view>
#include <type_traits>

namespace hermitex {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exact complex number a + b i with rational parts.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit widening
  ComplexRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}
  ComplexRational(long re) : re_(re) {}  // NOLINT

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ComplexRational conj() const { return {re_, Rational(-im_)}; }
  /// Multiplicative inverse; throws DomainError for zero.
  ComplexRational inverse() const;

  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) { return *this *= o.inverse(); }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) {
    return {Rational(-a.re_), Rational(-a.im_)};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class CoefficientRing { rational, complex_rational, float64, complex_float64 };

std::string_view to_string(CoefficientRing ring);

template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static constexpr CoefficientRing tag = CoefficientRing::rational;
  static constexpr bool exact = true;
  using float_type = double;
};
template <>
struct ring_traits<ComplexRational> {
  static constexpr CoefficientRing tag = CoefficientRing::complex_rational;
  static constexpr bool exact = true;
  using float_type = Complex;
};
template <>
struct ring_traits<double> {
  static constexpr CoefficientRing tag = CoefficientRing::float64;
  static constexpr bool exact = false;
  using float_type = double;
};
template <>
struct ring_traits<Complex> {
  static constexpr CoefficientRing tag = CoefficientRing::complex_float64;
  static constexpr bool exact = false;
  using float_type = Complex;
};

template <class T>
concept Ring = requires { ring_traits<T>::tag; };
template <class T>
concept ExactRing = Ring<T> && ring_traits<T>::exact;
template <class T>
concept FloatRing = Ring<T> && !ring_traits<T>::exact;

/// Smallest ring containing both A and B. Exact and float rings do not mix.
template <Ring A, Ring B>
struct common_ring;
template <Ring A>
struct common_ring<A, A> {
  using type = A;
};
template <>
struct common_ring<Rational, ComplexRational> {
  using type = ComplexRational;
};
template <>
struct common_ring<ComplexRational, Rational> {
  using type = ComplexRational;
};
template <>
struct common_ring<double, Complex> {
  using type = Complex;
};
template <>
struct common_ring<Complex, double> {
  using type = Complex;
};
template <Ring A, Ring B>
using common_ring_t = typename common_ring<A, B>::type;

template <Ring T>
T ring_zero() {
  return T(0);
}
template <Ring T>
T ring_one() {
  return T(1);
}
template <Ring T>
T from_integer(long k) {
  if constexpr (std::same_as<T, ComplexRational>) {
    return ComplexRational(Rational(k));
  } else {
    return T(k);
  }
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }
inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

/// Nearest double (ties to even). Throws RangeError when |q| rounds past DBL_MAX.
double to_double(const Rational& q);
Complex to_complex(const ComplexRational& z);

/// Exact binary value of a finite double. Throws DomainError for inf/nan.
Rational from_double(double v);

}  // namespace hermitex
