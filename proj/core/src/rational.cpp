#include "arrangealex/rational.hpp"

#include <cctype>
#include <numeric>

#include "arrangealex/error.hpp"

namespace arrangealex {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::precondition: return "precondition_failed";
    case ErrorCode::invalid_representation: return "invalid_representation";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::shape_mismatch: return "shape_mismatch";
    case ErrorCode::field_mismatch: return "field_mismatch";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::internal: return "internal_error";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::division_by_zero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

static bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  bool neg = false;
  std::string_view v(s);
  if (!v.empty() && (v[0] == '-' || v[0] == '+')) {
    neg = v[0] == '-';
    v.remove_prefix(1);
  }
  auto slash = v.find('/');
  std::string_view num = v.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : v.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::parse_error, "bad rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (neg) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }
long mod_long(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace arrangealex
