#pragma once

#include <variant>

#include "hermitex/polynomial.hpp"
#include "hermitex/ring.hpp"

namespace hermitex {

/// Ring element with a runtime ring tag.
using Scalar = std::variant<Rational, ComplexRational, double, Complex>;

CoefficientRing ring_of(const Scalar& s);

/// Polynomial whose coefficient ring is chosen at runtime (text input, CLI).
/// Binary operations require equal rings and throw RingMismatch otherwise.
class AnyPolynomial {
 public:
  using Storage = std::variant<Polynomial<Rational>, Polynomial<ComplexRational>, Polynomial<double>,
                               Polynomial<Complex>>;

  AnyPolynomial() = default;
  template <Ring T>
  AnyPolynomial(Polynomial<T> p) : storage_(std::move(p)) {}  // NOLINT: implicit by design of the variant

  CoefficientRing ring() const;
  int degree() const;
  const Storage& storage() const noexcept { return storage_; }

  template <Ring T>
  const Polynomial<T>& get() const {
    return std::get<Polynomial<T>>(storage_);
  }

  friend bool operator==(const AnyPolynomial&, const AnyPolynomial&) = default;

 private:
  Storage storage_;
};

AnyPolynomial add(const AnyPolynomial& p, const AnyPolynomial& q);
AnyPolynomial mul(const AnyPolynomial& p, const AnyPolynomial& q);
AnyPolynomial derivative(const AnyPolynomial& p, std::size_t order);
AnyPolynomial to_float(const AnyPolynomial& p);

/// Evaluates in the common ring of p and z. Mixing exact and float rings
/// throws NonCoercible.
Scalar evaluate(const AnyPolynomial& p, const Scalar& z);

/// p(a x); same coercion rules as evaluate.
AnyPolynomial substitute_scaled(const AnyPolynomial& p, const Scalar& a);

/// W(c) p. Rational c works on every ring; float c only on float rings
/// (NonCoercible otherwise).
AnyPolynomial apply_heat_operator(const Scalar& c, const AnyPolynomial& p);

}  // namespace hermitex
