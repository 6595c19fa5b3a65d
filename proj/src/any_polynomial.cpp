#include "hermitex/any_polynomial.hpp"

#include <string>
#include <type_traits>

#include "hermitex/error.hpp"
#include "hermitex/heat_operator.hpp"

namespace hermitex {
namespace {

template <class A, class B>
constexpr bool kCoercible = requires { typename common_ring<A, B>::type; };

[[noreturn]] void throw_mismatch(CoefficientRing a, CoefficientRing b) {
  throw RingMismatch("ring mismatch: " + std::string(to_string(a)) + " vs " + std::string(to_string(b)));
}

[[noreturn]] void throw_non_coercible(CoefficientRing poly, CoefficientRing point) {
  throw NonCoercible("cannot coerce a " + std::string(to_string(point)) + " value into a " +
                     std::string(to_string(poly)) + " polynomial");
}

template <class Op>
AnyPolynomial same_ring(const AnyPolynomial& p, const AnyPolynomial& q, Op op) {
  return std::visit(
      [&](const auto& a, const auto& b) -> AnyPolynomial {
        using A = std::decay_t<decltype(a)>;
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<A, B>) {
          return op(a, b);
        } else {
          throw_mismatch(A::ring(), B::ring());
        }
      },
      p.storage(), q.storage());
}

}  // namespace

CoefficientRing ring_of(const Scalar& s) {
  return std::visit([](const auto& v) { return ring_traits<std::decay_t<decltype(v)>>::tag; }, s);
}

CoefficientRing AnyPolynomial::ring() const {
  return std::visit([](const auto& p) { return p.ring(); }, storage_);
}

int AnyPolynomial::degree() const {
  return std::visit([](const auto& p) { return p.degree(); }, storage_);
}

AnyPolynomial add(const AnyPolynomial& p, const AnyPolynomial& q) {
  return same_ring(p, q, [](const auto& a, const auto& b) { return a + b; });
}

AnyPolynomial mul(const AnyPolynomial& p, const AnyPolynomial& q) {
  return same_ring(p, q, [](const auto& a, const auto& b) { return a * b; });
}

AnyPolynomial derivative(const AnyPolynomial& p, std::size_t order) {
  return std::visit([&](const auto& a) -> AnyPolynomial { return derivative(a, order); }, p.storage());
}

AnyPolynomial to_float(const AnyPolynomial& p) {
  return std::visit([](const auto& a) -> AnyPolynomial { return to_float(a); }, p.storage());
}

Scalar evaluate(const AnyPolynomial& p, const Scalar& z) {
  return std::visit(
      [&](const auto& poly, const auto& point) -> Scalar {
        using T = typename std::decay_t<decltype(poly)>::value_type;
        using Z = std::decay_t<decltype(point)>;
        if constexpr (kCoercible<T, Z>) {
          return evaluate(poly, point);
        } else {
          throw_non_coercible(ring_traits<T>::tag, ring_traits<Z>::tag);
        }
      },
      p.storage(), z);
}

AnyPolynomial substitute_scaled(const AnyPolynomial& p, const Scalar& a) {
  return std::visit(
      [&](const auto& poly, const auto& scale) -> AnyPolynomial {
        using T = typename std::decay_t<decltype(poly)>::value_type;
        using Z = std::decay_t<decltype(scale)>;
        if constexpr (kCoercible<T, Z>) {
          return substitute_scaled(poly, scale);
        } else {
          throw_non_coercible(ring_traits<T>::tag, ring_traits<Z>::tag);
        }
      },
      p.storage(), a);
}

AnyPolynomial apply_heat_operator(const Scalar& c, const AnyPolynomial& p) {
  return std::visit(
      [&](const auto& param, const auto& poly) -> AnyPolynomial {
        using S = std::decay_t<decltype(param)>;
        using T = typename std::decay_t<decltype(poly)>::value_type;
        if constexpr (HeatParameter<S> && HeatCompatible<T, S>) {
          return apply_heat_operator(HeatOperator<S>(param), poly);
        } else {
          throw_non_coercible(ring_traits<T>::tag, ring_traits<S>::tag);
        }
      },
      c, p.storage());
}

}  // namespace hermitex
