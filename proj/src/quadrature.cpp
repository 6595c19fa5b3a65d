#include "hermitex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hermitex/error.hpp"

namespace hermitex {
namespace {

constexpr int kMaxSweeps = 60;

// Implicit-shift QL on a symmetric tridiagonal matrix with zero diagonal
// entries `diag` and off-diagonal `off` (off[k] couples rows k and k+1).
// Only the first row of the eigenvector matrix is accumulated in `first`.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off, std::vector<double>& first) {
  const int n = static_cast<int>(diag.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  off.push_back(0.0);

  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m = l;
    while (true) {
      for (m = l; m < n - 1; ++m) {
        const double scale = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= eps * scale) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps) {
        throw NumericalError("Gauss-Hermite eigen-iteration did not converge for eigenvalue " +
                             std::to_string(l));
      }

      // Wilkinson-style shift from the leading 2x2 block.
      double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));

      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * off[i];
        const double b = c * off[i];
        r = std::hypot(f, g);
        off[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          off[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;

        const double z = first[i + 1];
        first[i + 1] = s * first[i] + c * z;
        first[i] = c * first[i] - s * z;
      }
      if (deflated) continue;
      diag[l] -= p;
      off[l] = g;
      off[m] = 0.0;
    }
  }
  off.pop_back();
}

}  // namespace

GaussHermiteRule build_rule(std::size_t m) {
  if (m < 1 || m > GaussHermiteRule::max_order) {
    throw DomainError("Gauss-Hermite order must lie in [1, " +
                      std::to_string(GaussHermiteRule::max_order) + "], got " + std::to_string(m));
  }

  // Jacobi matrix of the monic Hermite recurrence: zero diagonal,
  // off-diagonals sqrt(k/2).
  std::vector<double> diag(m, 0.0);
  std::vector<double> off(m - 1);
  for (std::size_t k = 1; k < m; ++k) off[k - 1] = std::sqrt(static_cast<double>(k) / 2.0);
  std::vector<double> first(m, 0.0);
  first[0] = 1.0;

  tridiagonal_ql(diag, off, first);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  std::vector<double> nodes(m);
  std::vector<double> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    nodes[i] = diag[order[i]];
    weights[i] = std::sqrt(std::numbers::pi) * first[order[i]] * first[order[i]];
  }

  // Exact symmetry: t_i = -t_{m-1-i}, w_i = w_{m-1-i}.
  for (std::size_t i = 0; i < m / 2; ++i) {
    const std::size_t j = m - 1 - i;
    const double t = 0.5 * (nodes[j] - nodes[i]);
    const double w = 0.5 * (weights[i] + weights[j]);
    nodes[i] = -t;
    nodes[j] = t;
    weights[i] = w;
    weights[j] = w;
  }
  if (m % 2 == 1) nodes[m / 2] = 0.0;

  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(nodes[i]) || !(weights[i] > 0.0)) {
      throw NumericalError("Gauss-Hermite rule of order " + std::to_string(m) +
                           " produced a non-positive or non-finite weight at node " + std::to_string(i));
    }
  }
  return GaussHermiteRule(std::move(nodes), std::move(weights));
}

std::size_t default_rule_order(std::size_t degree) { return (degree + 2) / 2 + 2; }

}  // namespace hermitex
