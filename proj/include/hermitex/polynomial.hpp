#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "hermitex/ring.hpp"

namespace hermitex {

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The stored sequence never ends in a zero coefficient; the zero polynomial
/// is the empty sequence and reports degree -1.
template <Ring T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  /// c * x^n
  static Polynomial monomial(std::size_t n, T c = ring_one<T>()) {
    std::vector<T> coeffs(n + 1, ring_zero<T>());
    coeffs[n] = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const T> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^k; zero past the degree.
  T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_zero<T>(); }
  const T& leading() const { return coeffs_.back(); }

  static constexpr CoefficientRing ring() noexcept { return ring_traits<T>::tag; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_zero<T>());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_zero<T>());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const T& s) { return p *= s; }
  friend Polynomial operator*(const T& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1, ring_zero<T>());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (hermitex::is_zero(p.coeffs_[i])) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && hermitex::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <Ring T>
Polynomial<T> add(const Polynomial<T>& p, const Polynomial<T>& q) {
  return p + q;
}

template <Ring T>
Polynomial<T> mul(const Polynomial<T>& p, const Polynomial<T>& q) {
  return p * q;
}

/// order-fold formal derivative
template <Ring T>
Polynomial<T> derivative(const Polynomial<T>& p, std::size_t order = 1) {
  if (order == 0) return p;
  if (static_cast<std::size_t>(p.degree() + 1) <= order) return {};
  const auto c = p.coeffs();
  std::vector<T> out(c.size() - order);
  for (std::size_t k = 0; k < out.size(); ++k) {
    // multiply by the falling factorial (k+order)!/k! one factor at a time
    T term = c[k + order];
    for (std::size_t j = k + 1; j <= k + order; ++j) term *= from_integer<T>(static_cast<long>(j));
    out[k] = std::move(term);
  }
  return Polynomial<T>(std::move(out));
}

/// Horner evaluation in the common ring of the coefficients and the point.
template <Ring T, Ring Z>
common_ring_t<T, Z> evaluate(const Polynomial<T>& p, const Z& z) {
  using R = common_ring_t<T, Z>;
  R acc = ring_zero<R>();
  const R point(z);
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= point;
    acc += R(c[k]);
  }
  return acc;
}

/// p(a x): coefficient k scaled by a^k.
template <Ring T, Ring A>
Polynomial<common_ring_t<T, A>> substitute_scaled(const Polynomial<T>& p, const A& a) {
  using R = common_ring_t<T, A>;
  const R scale(a);
  R power = ring_one<R>();
  std::vector<R> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    R term(c);
    term *= power;
    out.push_back(std::move(term));
    power *= scale;
  }
  return Polynomial<R>(std::move(out));
}

/// Coefficientwise conversion into a wider ring of the same exactness.
template <Ring To, Ring From>
  requires std::same_as<common_ring_t<From, To>, To>
Polynomial<To> widen(const Polynomial<From>& p) {
  std::vector<To> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return Polynomial<To>(std::move(out));
}

Polynomial<double> to_float(const Polynomial<Rational>& p);
Polynomial<Complex> to_float(const Polynomial<ComplexRational>& p);
inline Polynomial<double> to_float(const Polynomial<double>& p) { return p; }
inline Polynomial<Complex> to_float(const Polynomial<Complex>& p) { return p; }

}  // namespace hermitex
