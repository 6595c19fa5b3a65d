#include "hermitex/polynomial.hpp"

#include "hermitex/error.hpp"

namespace hermitex {
namespace {

template <class F, class E>
Polynomial<F> checked(Polynomial<F> out, const Polynomial<E>& in) {
  if (out.degree() != in.degree()) {
    throw RangeError("leading coefficient underflows the float64 range");
  }
  return out;
}

}  // namespace

Polynomial<double> to_float(const Polynomial<Rational>& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return checked(Polynomial<double>(std::move(out)), p);
}

Polynomial<Complex> to_float(const Polynomial<ComplexRational>& p) {
  std::vector<Complex> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(to_complex(c));
  return checked(Polynomial<Complex>(std::move(out)), p);
}

}  // namespace hermitex
