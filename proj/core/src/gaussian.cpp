#include "arrangealex/gaussian.hpp"

#include <cctype>

#include "arrangealex/error.hpp"

namespace arrangealex {

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) fail(ErrorCode::division_by_zero, "inverse of zero in Q(i)");
  return {re / n, -im / n};
}

bool lex_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

// Imaginary part text: "", "+", "-" or a rational, possibly ending in '*'.
static Rational imag_coefficient(std::string_view t, std::string_view whole) {
  if (!t.empty() && t.back() == '*') t.remove_suffix(1);
  if (t.empty() || t == "+") return Rational(1);
  if (t == "-") return Rational(-1);
  if (t.back() == '+' || t.back() == '-')
    fail(ErrorCode::parse_error, "bad Gaussian rational '" + std::string(whole) + "'");
  return parse_rational(t);
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::parse_error, "empty coefficient");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  std::string_view body(s);
  body.remove_suffix(1);
  // split at the last sign that is not the leading one
  std::size_t cut = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      cut = k;
      break;
    }
  }
  if (cut == std::string_view::npos) return {Rational(0), imag_coefficient(body, text)};
  return {parse_rational(body.substr(0, cut)), imag_coefficient(body.substr(cut), text)};
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string im = to_string(abs(z.im)) + "*i";
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im;
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im;
}

}  // namespace arrangealex
