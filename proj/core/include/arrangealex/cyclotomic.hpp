#pragma once

#include <string>
#include <vector>

#include "arrangealex/rational.hpp"

namespace arrangealex {

long euler_phi(long n);

// Phi_N as dense integer coefficients, constant term first. Cached.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Element of Q(zeta_N) stored as a residue mod Phi_N with exactly phi(N)
// coefficients. Conductor 1 is Q itself. Rational elements (degree-one
// fields) promote into any conductor when mixed; mixing two genuinely
// different cyclotomic fields is a field_mismatch error.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), c_(1) {}
  Cyclotomic(long v) : conductor_(1), c_{Rational(v)} {}
  Cyclotomic(const Rational& v) : conductor_(1), c_{v} {}
  Cyclotomic(const Rational& v, long conductor);

  // Reduces an arbitrary-length coefficient list mod Phi_N.
  static Cyclotomic from_coeffs(long conductor, std::vector<Rational> coeffs);
  static Cyclotomic zeta(long conductor, long k = 1);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Total order for use as map keys and canonical output ordering.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

  // Same value seen in Q(zeta_M), M a multiple of the conductor.
  Cyclotomic embed(long m) const;

 private:
  long conductor_;
  std::vector<Rational> c_;
  void reduce();
  friend void align(Cyclotomic& a, Cyclotomic& b);
};

Cyclotomic field_inverse(const Cyclotomic& a);

// Coefficients as an ascending sum, e.g. "1/2 - zeta5^2"; plain rationals
// print as "p/q".
std::string to_string(const Cyclotomic& a);

// Scalars used by every polynomial / matrix routine.
using Scalar = Cyclotomic;

struct FieldConfig {
  long conductor = 1;
  bool is_rationals() const { return conductor == 1; }
  std::string name() const;
  Scalar zeta(long k = 1) const { return Scalar::zeta(conductor, k); }
  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

}  // namespace arrangealex
