#pragma once

#include <cstddef>
#include <vector>

#include "hermitex/polynomial.hpp"
#include "hermitex/quadrature.hpp"
#include "hermitex/ring.hpp"

namespace hermitex {

inline constexpr unsigned kDefaultOrderCap = 200;

/// Order cap in effect: HERMITEX_CAP from the environment when set, else 200.
/// Throws DomainError for a malformed HERMITEX_CAP.
unsigned order_cap();

/// Polynomial order n, checked against a cap at construction.
class HermiteIndex {
 public:
  /// Throws CapExceeded when n > cap.
  explicit HermiteIndex(unsigned n) : HermiteIndex(n, order_cap()) {}
  HermiteIndex(unsigned n, unsigned cap);

  unsigned value() const noexcept { return n_; }

 private:
  unsigned n_;
};

/// Physicists' H_n from H_{k+1} = 2x H_k - 2k H_{k-1}.
Polynomial<Rational> hermite_recurrence(HermiteIndex n);

/// H_0 .. H_n from one pass of the recurrence.
std::vector<Polynomial<Rational>> hermite_family(HermiteIndex n);

/// H_n = 2^n W(-1/4) x^n.
Polynomial<Rational> hermite_via_operator(HermiteIndex n);

/// (2^n / sqrt(pi)) sum_i w_i (x + i t_i)^n, the quadrature form of
/// H_n(x) = (2^n / sqrt(pi)) Int (x + i t)^n exp(-t^2) dt.
/// The real part is returned; the imaginary residue must stay below
/// 1e-10 max(1, |result|) or NumericalError is thrown.
/// Requires 2m - 1 >= n (DomainError otherwise).
double hermite_integral_rep(HermiteIndex n, double x, const GaussHermiteRule& rule);

/// Same sum without the residue check; real part approximates H_n(x).
Complex hermite_integral_rep_complex(HermiteIndex n, double x, const GaussHermiteRule& rule);

/// (2i)^-n H_n(ix), computed over the complex rationals and certified real.
/// Throws InvariantViolation if any imaginary coefficient is nonzero.
Polynomial<Rational> modified_hermite(HermiteIndex n);

/// H_n(x) in double precision via the three-term recurrence.
double hermite_value(unsigned n, double x);

}  // namespace hermitex
