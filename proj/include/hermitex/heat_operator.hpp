#pragma once

#include <concepts>
#include <vector>

#include "hermitex/polynomial.hpp"
#include "hermitex/ring.hpp"

namespace hermitex {

template <class S>
concept HeatParameter = std::same_as<S, Rational> || std::same_as<S, double>;

/// W(c) = exp[c d^2/dx^2], carried by its parameter alone.
///
/// On polynomials the exponential series terminates, so any sign of c is
/// valid. Rational c gives exact results on exact rings; double c is only
/// accepted for float-ring polynomials.
template <HeatParameter S>
class HeatOperator {
 public:
  HeatOperator() : c_(0) {}
  explicit HeatOperator(S c) : c_(std::move(c)) {}

  const S& c() const noexcept { return c_; }

  friend bool operator==(const HeatOperator& a, const HeatOperator& b) { return a.c_ == b.c_; }

 private:
  S c_;
};

HeatOperator(Rational) -> HeatOperator<Rational>;
HeatOperator(double) -> HeatOperator<double>;

/// W(a) W(b) = W(a + b)
template <HeatParameter S>
HeatOperator<S> compose(const HeatOperator<S>& a, const HeatOperator<S>& b) {
  return HeatOperator<S>(S(a.c() + b.c()));
}

/// W(c)^-1 = W(-c) on polynomials
template <HeatParameter S>
HeatOperator<S> invert(const HeatOperator<S>& op) {
  return HeatOperator<S>(S(-op.c()));
}

template <class T, class S>
concept HeatCompatible = (ExactRing<T> && std::same_as<S, Rational>) || FloatRing<T>;

/// The nonvanishing series terms c^k p^(2k) / k!, k = 0 .. floor(deg p / 2).
template <Ring T, HeatParameter S>
  requires HeatCompatible<T, S>
std::vector<Polynomial<T>> heat_series_terms(const HeatOperator<S>& op, const Polynomial<T>& p) {
  std::vector<Polynomial<T>> terms;
  if (p.is_zero()) return terms;
  T c;
  if constexpr (ExactRing<T> || std::same_as<S, double>) {
    c = T(op.c());
  } else {
    c = T(to_double(op.c()));
  }

  T factor = ring_one<T>();
  Polynomial<T> d = p;
  const auto count = static_cast<std::size_t>(p.degree() / 2 + 1);
  terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      factor *= c;
      factor /= from_integer<T>(static_cast<long>(k));
      d = derivative(d, 2);
    }
    terms.push_back(d * factor);
  }
  return terms;
}

/// W(c) p = sum_k c^k p^(2k) / k!
template <Ring T, HeatParameter S>
  requires HeatCompatible<T, S>
Polynomial<T> apply_heat_operator(const HeatOperator<S>& op, const Polynomial<T>& p) {
  Polynomial<T> out;
  for (const auto& term : heat_series_terms(op, p)) out += term;
  return out;
}

}  // namespace hermitex
