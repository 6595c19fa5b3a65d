#include "hermitex/genfunc.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "hermitex/error.hpp"
#include "hermitex/gauss_transform.hpp"
#include "hermitex/hermite.hpp"

namespace hermitex {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Grows a polynomial family on demand and hands out copies of its prefix.
// Results are identical to calling `build` directly.
class FamilyMemo {
 public:
  using Family = std::vector<Polynomial<Rational>>;
  explicit FamilyMemo(std::function<Family(unsigned)> build) : build_(std::move(build)) {}

  Family prefix(unsigned order) {
    std::shared_ptr<const Family> snapshot;
    {
      std::lock_guard lock(mutex_);
      if (!cached_ || cached_->size() <= order) cached_ = std::make_shared<const Family>(build_(order));
      snapshot = cached_;
    }
    return Family(snapshot->begin(), snapshot->begin() + order + 1);
  }

 private:
  std::function<Family(unsigned)> build_;
  std::mutex mutex_;
  std::shared_ptr<const Family> cached_;
};

}  // namespace

SeriesTruncation::SeriesTruncation(unsigned order, double t, double x, double t_bound)
    : order_(order), t_(t), x_(x) {
  (void)HermiteIndex{order};
  if (!std::isfinite(t) || !std::isfinite(x)) throw DomainError("series point must be finite");
  if (std::abs(t) > t_bound) {
    throw DomainError("|t| = " + std::to_string(std::abs(t)) + " exceeds the configured bound " +
                      std::to_string(t_bound));
  }
}

const GeneratingFunction& hermite_egf() {
  static FamilyMemo memo([](unsigned order) { return hermite_family(HermiteIndex{order}); });
  static const GeneratingFunction gf{
      "HERMITE_EGF",
      [](unsigned order) { return memo.prefix(order); },
      [](double x, double t) { return std::exp(2.0 * x * t - t * t); },
  };
  return gf;
}

const GeneratingFunction& transformed_hermite_egf() {
  static FamilyMemo memo([](unsigned order) {
    auto family = hermite_family(HermiteIndex{order});
    const GaussParameter u(Rational(1, 2));
    for (auto& p : family) p = gauss_symbolic(p, u);
    return family;
  });
  static const GeneratingFunction gf{
      "TRANSFORMED_HERMITE_EGF",
      [](unsigned order) { return memo.prefix(order); },
      [](double x, double t) { return std::exp(2.0 * x * t); },
  };
  return gf;
}

std::vector<std::reference_wrapper<const GeneratingFunction>> registered_generating_functions() {
  return {std::cref(hermite_egf()), std::cref(transformed_hermite_egf())};
}

double partial_sum(const GeneratingFunction& gf, const SeriesTruncation& trunc) {
  const Rational x = from_double(trunc.x());
  const auto terms = gf.terms(trunc.order());
  CompensatedSum sum;
  // t^n / n! built incrementally
  double weight = 1.0;
  for (unsigned n = 0; n <= trunc.order(); ++n) {
    if (n > 0) weight *= trunc.t() / static_cast<double>(n);
    if (weight == 0.0) break;
    sum.add(to_double(evaluate(terms.at(n), x)) * weight);
  }
  return sum.value();
}

double egf_partial(const SeriesTruncation& trunc) { return partial_sum(hermite_egf(), trunc); }

double transformed_egf_partial(const SeriesTruncation& trunc) {
  return partial_sum(transformed_hermite_egf(), trunc);
}

EgfResidual egf_residual(const SeriesTruncation& trunc) {
  const double x = trunc.x();
  const double t = trunc.t();
  return {std::abs(egf_partial(trunc) - hermite_egf().closed_form(x, t)),
          std::abs(transformed_egf_partial(trunc) - transformed_hermite_egf().closed_form(x, t))};
}

}  // namespace hermitex
