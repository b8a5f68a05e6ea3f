#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arrangealex/cyclotomic.hpp"

namespace arrangealex {

// Laurent polynomial sum_k c_k t^(valuation + k), trimmed at both ends.
// The zero polynomial is valuation 0 with no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Scalar& c);
  LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}

  static LaurentPoly monomial(const Scalar& c, long e);
  static LaurentPoly t(long e = 1) { return monomial(Scalar(1), e); }
  static LaurentPoly from_coeffs(long valuation, std::vector<Scalar> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  long valuation() const { return v_; }
  long top() const { return v_ + static_cast<long>(c_.size()) - 1; }
  // Euclidean size: top - valuation, -1 for zero.
  long spread() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(long e) const;
  const Scalar& leading() const { return c_.back(); }
  const Scalar& trailing() const { return c_.front(); }

  LaurentPoly shifted(long k) const;
  LaurentPoly derivative() const;
  Scalar eval(const Scalar& x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Scalar& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.v_ == b.v_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend int compare(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned long e) const;

 private:
  long v_ = 0;
  std::vector<Scalar> c_;
  void trim();
};

struct LaurentDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

// a = q*b + r with spread(r) < spread(b), computed on the polynomial
// parts after moving both valuations to zero.
LaurentDivision divmod(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// Representative of a unit class c*t^k: monic, nonzero constant term.
class CanonicalPoly {
 public:
  CanonicalPoly() : p_(1) {}
  static CanonicalPoly one() { return CanonicalPoly(); }

  const LaurentPoly& poly() const { return p_; }
  long degree() const { return p_.top(); }
  bool is_one() const { return p_.top() == 0; }

  friend CanonicalPoly operator*(const CanonicalPoly& a, const CanonicalPoly& b);
  CanonicalPoly& operator*=(const CanonicalPoly& b) { return *this = *this * b; }
  CanonicalPoly pow(unsigned long e) const;

  friend bool operator==(const CanonicalPoly& a, const CanonicalPoly& b) { return a.p_ == b.p_; }
  friend bool operator!=(const CanonicalPoly& a, const CanonicalPoly& b) { return !(a == b); }
  friend bool operator<(const CanonicalPoly& a, const CanonicalPoly& b) {
    return compare(a.p_, b.p_) < 0;
  }

 private:
  explicit CanonicalPoly(LaurentPoly p) : p_(std::move(p)) {}
  LaurentPoly p_;
  friend CanonicalPoly normalize(const LaurentPoly& p);
};

CanonicalPoly normalize(const LaurentPoly& p);
CanonicalPoly gcd(const LaurentPoly& p, const LaurentPoly& q);
inline CanonicalPoly gcd(const CanonicalPoly& p, const CanonicalPoly& q) { return gcd(p.poly(), q.poly()); }
CanonicalPoly lcm(const CanonicalPoly& p, const CanonicalPoly& q);
bool divides(const CanonicalPoly& b, const CanonicalPoly& a);
std::optional<CanonicalPoly> divide_exact(const CanonicalPoly& a, const CanonicalPoly& b);
// Squarefree part, p / gcd(p, p').
CanonicalPoly radical(const CanonicalPoly& p);

// "t^3 - 2*t + 1"; non-rational coefficients are parenthesized.
std::string to_string(const LaurentPoly& p);
inline std::string to_string(const CanonicalPoly& p) { return to_string(p.poly()); }
// [[exponent, "coeff"], ...] in ascending exponent order, as JSON text.
std::string to_json_pairs(const LaurentPoly& p);

// Inverse of to_string. Coefficients may be rationals, zetaN^k powers,
// or parenthesized sums of those.
LaurentPoly parse_laurent(std::string_view text);
Scalar parse_scalar(std::string_view text);

}  // namespace arrangealex
