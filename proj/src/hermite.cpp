#include "hermitex/hermite.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>

#include "hermitex/error.hpp"
#include "hermitex/heat_operator.hpp"

namespace hermitex {

unsigned order_cap() {
  const char* env = std::getenv("HERMITEX_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  const std::string_view text(env);
  unsigned cap = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw DomainError("HERMITEX_CAP must be a nonnegative integer, got '" + std::string(text) + "'");
  }
  return cap;
}

HermiteIndex::HermiteIndex(unsigned n, unsigned cap) : n_(n) {
  if (n > cap) {
    throw CapExceeded("Hermite order " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

std::vector<Polynomial<Rational>> hermite_family(HermiteIndex index) {
  const unsigned n = index.value();
  std::vector<Polynomial<Rational>> family;
  family.reserve(n + 1);
  family.push_back(Polynomial<Rational>{Rational(1)});
  const Polynomial<Rational> two_x{Rational(0), Rational(2)};
  if (n >= 1) family.push_back(two_x);
  for (unsigned k = 1; k < n; ++k) {
    family.push_back(two_x * family[k] - family[k - 1] * Rational(2 * k));
  }
  return family;
}

Polynomial<Rational> hermite_recurrence(HermiteIndex index) {
  const unsigned n = index.value();
  Polynomial<Rational> previous{Rational(1)};
  if (n == 0) return previous;
  const Polynomial<Rational> two_x{Rational(0), Rational(2)};
  Polynomial<Rational> current = two_x;
  for (unsigned k = 1; k < n; ++k) {
    Polynomial<Rational> next = two_x * current - previous * Rational(2 * k);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Polynomial<Rational> hermite_via_operator(HermiteIndex index) {
  const unsigned n = index.value();
  const HeatOperator w(Rational(-1, 4));
  Rational scale;
  mpz_ui_pow_ui(scale.get_num_mpz_t(), 2, n);
  return apply_heat_operator(w, Polynomial<Rational>::monomial(n)) * scale;
}

Complex hermite_integral_rep_complex(HermiteIndex index, double x, const GaussHermiteRule& rule) {
  const unsigned n = index.value();
  if (rule.exact_degree() < n) {
    throw DomainError("integral representation of H_" + std::to_string(n) + " needs at least " +
                      std::to_string(n / 2 + 1) + " quadrature nodes, rule has " +
                      std::to_string(rule.order()));
  }
  const Complex sum = integrate(
      [&](double t) {
        const Complex z(x, t);
        Complex power(1.0, 0.0);
        for (unsigned k = 0; k < n; ++k) power *= z;
        return power;
      },
      rule);
  return sum * (std::ldexp(1.0, static_cast<int>(n)) / std::sqrt(std::numbers::pi));
}

double hermite_integral_rep(HermiteIndex index, double x, const GaussHermiteRule& rule) {
  const Complex value = hermite_integral_rep_complex(index, x, rule);
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
    throw NumericalError("integral representation of H_" + std::to_string(index.value()) +
                         " left an imaginary residue of " + std::to_string(value.imag()));
  }
  return value.real();
}

Polynomial<Rational> modified_hermite(HermiteIndex index) {
  const unsigned n = index.value();
  const auto h = widen<ComplexRational>(hermite_recurrence(index));
  const auto h_of_ix = substitute_scaled(h, ComplexRational::i());

  ComplexRational two_i_power(1);
  for (unsigned k = 0; k < n; ++k) two_i_power *= ComplexRational(Rational(0), Rational(2));
  const auto scaled = h_of_ix * two_i_power.inverse();

  std::vector<Rational> real;
  real.reserve(scaled.size());
  std::size_t k = 0;
  for (const auto& c : scaled.coeffs()) {
    if (!c.is_real()) {
      throw InvariantViolation("(2i)^-n H_n(ix) has a nonzero imaginary coefficient at x^" +
                               std::to_string(k) + " for n=" + std::to_string(n));
    }
    real.push_back(c.real());
    ++k;
  }
  return Polynomial<Rational>(std::move(real));
}

double hermite_value(unsigned n, double x) {
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 2.0 * x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace hermitex
