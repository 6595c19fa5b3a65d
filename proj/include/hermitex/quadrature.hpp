#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

namespace hermitex {

/// m-point Gauss-Hermite rule for the weight exp(-t^2).
///
/// Nodes ascend and are symmetric about zero; weights are positive and sum
/// to sqrt(pi). The rule integrates polynomials of degree <= 2m-1 exactly up
/// to roundoff. No 1/sqrt(pi) normalization is folded into the weights.
class GaussHermiteRule {
 public:
  static constexpr std::size_t max_order = 500;

  std::size_t order() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Highest polynomial degree integrated exactly.
  std::size_t exact_degree() const noexcept { return 2 * nodes_.size() - 1; }

  friend bool operator==(const GaussHermiteRule&, const GaussHermiteRule&) = default;

 private:
  friend GaussHermiteRule build_rule(std::size_t m);
  GaussHermiteRule(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Golub-Welsch construction. Throws DomainError unless 1 <= m <= 500 and
/// NumericalError if the eigen-iteration fails to converge.
GaussHermiteRule build_rule(std::size_t m);

/// Node count that makes a degree-d polynomial integrand exact with a guard
/// of two extra nodes: ceil((d+1)/2) + 2.
std::size_t default_rule_order(std::size_t degree);

/// sum_i w_i f(t_i)
///
/// Mirrored nodes are summed as pairs w_i (f(t_i) + f(-t_i)), outermost pair
/// first, so the odd part of f cancels exactly.
template <class F>
auto integrate(F&& f, const GaussHermiteRule& rule) {
  using R = std::decay_t<std::invoke_result_t<F&, double>>;
  R sum{};
  const auto t = rule.nodes();
  const auto w = rule.weights();
  const std::size_t m = t.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    R pair = f(t[i]);
    pair += f(t[m - 1 - i]);
    sum += w[i] * pair;
  }
  if (m % 2 == 1) sum += w[m / 2] * f(t[m / 2]);
  return sum;
}

}  // namespace hermitex
