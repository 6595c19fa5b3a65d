#include "hermitex/poly_format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hermitex/error.hpp"

namespace hermitex {
namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      out += '-';
      i += kUnicodeMinus.size();
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& what, std::string_view token, std::size_t position) {
  std::string message = what + " '" + std::string(token) + "'";
  if (position > 0) message += " at token " + std::to_string(position);
  throw ParseError(message, position);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Splits "re+imi" at the sign that starts the imaginary part; returns npos
// for a purely imaginary token.
std::size_t imaginary_split(std::string_view body) {
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') return i;
  }
  return std::string_view::npos;
}

template <class Real, class Parse>
std::pair<Real, Real> parse_complex_parts(std::string_view token, std::size_t position, Parse parse_real,
                                          Real one) {
  if (token.empty() || token.back() != 'i') return {parse_real(token, position), Real(0)};
  const std::string_view body = token.substr(0, token.size() - 1);
  const std::size_t split = imaginary_split(body);
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  Real im;
  if (im_text.empty() || im_text == "+") {
    im = one;
  } else if (im_text == "-") {
    im = Real(-one);
  } else {
    if (im_text.front() == '+') im_text.remove_prefix(1);
    im = parse_real(im_text, position);
  }
  Real re = re_text.empty() ? Real(0) : parse_real(re_text, position);
  return {std::move(re), std::move(im)};
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    tokens.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return tokens;
}

template <class T, class Parse>
Polynomial<T> parse_tokens(const std::vector<std::string_view>& tokens, Parse parse) {
  std::vector<T> coeffs;
  coeffs.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) coeffs.push_back(parse(tokens[i], i + 1));
  return Polynomial<T>(std::move(coeffs));
}

}  // namespace

std::string format_scalar(const Rational& q) { return q.get_str(); }

std::string format_scalar(const ComplexRational& z) {
  std::string out = z.real().get_str();
  if (sgn(z.imag()) >= 0) out += '+';
  out += z.imag().get_str();
  out += 'i';
  return out;
}

std::string format_scalar(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string format_scalar(const Complex& z) {
  std::string out = format_scalar(z.real());
  const std::string im = format_scalar(z.imag());
  if (im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

std::string format_scalar(const Scalar& s) {
  return std::visit([](const auto& v) { return format_scalar(v); }, s);
}

std::string format_polynomial(const AnyPolynomial& p) {
  return std::visit([](const auto& poly) { return format_polynomial(poly); }, p.storage());
}

Rational parse_rational(std::string_view token, std::size_t position) {
  const std::string text = normalize_minus(trim(token));
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail("malformed rational", token, position);

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator" + (position > 0 ? " at token " + std::to_string(position) : ""),
                     position);
  }
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

ComplexRational parse_complex_rational(std::string_view token, std::size_t position) {
  const std::string text = normalize_minus(trim(token));
  auto [re, im] = parse_complex_parts<Rational>(
      text, position, [](std::string_view t, std::size_t pos) { return parse_rational(t, pos); }, Rational(1));
  return {std::move(re), std::move(im)};
}

double parse_float(std::string_view token, std::size_t position) {
  const std::string text = normalize_minus(trim(token));
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc() || end != body.data() + body.size() || !std::isfinite(v)) {
    fail("malformed float", token, position);
  }
  return v;
}

Complex parse_complex_float(std::string_view token, std::size_t position) {
  const std::string text = normalize_minus(trim(token));
  auto [re, im] = parse_complex_parts<double>(
      text, position, [](std::string_view t, std::size_t pos) { return parse_float(t, pos); }, 1.0);
  return {re, im};
}

CoefficientRing detect_exact_ring(std::string_view text) {
  return text.find('i') == std::string_view::npos ? CoefficientRing::rational : CoefficientRing::complex_rational;
}

AnyPolynomial parse_polynomial(std::string_view text, CoefficientRing ring) {
  if (trim(text).empty()) throw ParseError("empty polynomial text", 0);
  const auto tokens = split_tokens(text);
  switch (ring) {
    case CoefficientRing::rational:
      return parse_tokens<Rational>(tokens, [](std::string_view t, std::size_t i) { return parse_rational(t, i); });
    case CoefficientRing::complex_rational:
      return parse_tokens<ComplexRational>(
          tokens, [](std::string_view t, std::size_t i) { return parse_complex_rational(t, i); });
    case CoefficientRing::float64:
      return parse_tokens<double>(tokens, [](std::string_view t, std::size_t i) { return parse_float(t, i); });
    case CoefficientRing::complex_float64:
      return parse_tokens<Complex>(tokens,
                                   [](std::string_view t, std::size_t i) { return parse_complex_float(t, i); });
  }
  throw ParseError("unknown coefficient ring", 0);
}

}  // namespace hermitex
