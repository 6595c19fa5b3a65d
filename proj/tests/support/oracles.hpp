#pragma once

// Test-only oracles. Each one reaches its answer by a route that does not
// go through the library code it is used to check.

#include <cmath>
#include <numbers>
#include <random>

#include "hermitex/polynomial.hpp"

namespace hermitex::testing {

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational power(const Rational& base, unsigned n) {
  Rational out(1);
  for (unsigned k = 0; k < n; ++k) out *= base;
  return out;
}

/// (2k-1)!! with (-1)!! = 1
inline Rational double_factorial_odd(unsigned k) {
  Rational out(1);
  for (unsigned j = 1; j < 2 * k; j += 2) out *= j;
  return out;
}

/// Closed-form H_n: n! sum_m (-1)^m (2x)^(n-2m) / (m! (n-2m)!)
inline Polynomial<Rational> hermite_explicit(unsigned n) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned m = 0; 2 * m <= n; ++m) {
    Rational c = factorial(n) / (factorial(m) * factorial(n - 2 * m)) * power(Rational(2), n - 2 * m);
    if (m % 2 == 1) c = -c;
    coeffs[n - 2 * m] = c;
  }
  return Polynomial<Rational>(std::move(coeffs));
}

/// G^u[y^n](x) = E[(x + sqrt(u) Z)^n] = sum_j C(n,2j) (2j-1)!! u^j x^(n-2j)
inline Polynomial<Rational> gaussian_moment_transform(unsigned n, const Rational& u) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned j = 0; 2 * j <= n; ++j) {
    const Rational binom = factorial(n) / (factorial(2 * j) * factorial(n - 2 * j));
    coeffs[n - 2 * j] = binom * double_factorial_odd(j) * power(u, j);
  }
  return Polynomial<Rational>(std::move(coeffs));
}

/// Int t^k exp(-t^2) dt = sqrt(pi) (k-1)!! / 2^(k/2) for even k, 0 for odd k.
inline double gaussian_moment(unsigned k) {
  if (k % 2 == 1) return 0.0;
  double out = std::sqrt(std::numbers::pi);
  for (unsigned j = 1; j < k; j += 2) out *= static_cast<double>(j) / 2.0;
  return out;
}

class RandomPolynomials {
 public:
  explicit RandomPolynomials(std::uint32_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  ComplexRational complex_rational() { return {rational(), rational()}; }

  /// Degree drawn uniformly from [0, max_degree]; leading coefficient nonzero.
  Polynomial<Rational> polynomial(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng_);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= d; ++k) coeffs.push_back(rational());
    while (sgn(coeffs.back()) == 0) coeffs.back() = rational();
    return Polynomial<Rational>(std::move(coeffs));
  }

  Polynomial<ComplexRational> complex_polynomial(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng_);
    std::vector<ComplexRational> coeffs;
    for (int k = 0; k <= d; ++k) coeffs.push_back(complex_rational());
    while (coeffs.back().is_zero()) coeffs.back() = complex_rational();
    return Polynomial<ComplexRational>(std::move(coeffs));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace hermitex::testing
