#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrangealex/cyclotomic.hpp"
#include "arrangealex/free_word.hpp"
#include "arrangealex/presentation.hpp"

namespace arrangealex {

// Square matrix over the scalar field, row-major.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(std::size_t n) : n_(n), e_(n * n) {}
  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix scalar(std::size_t n, const Scalar& s);
  static ScalarMatrix diagonal(const std::vector<Scalar>& d);
  static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  Scalar determinant() const;
  ScalarMatrix inverse() const;  // throws invalid_representation when singular
  bool is_identity() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> e_;
};

std::string to_string(const ScalarMatrix& m);

struct TwistSpec {
  FieldConfig field;
  std::vector<long> epsilon;       // epsilon(a_j)
  std::vector<ScalarMatrix> rho;   // rho(a_j), all dim x dim
  std::size_t dim() const { return rho.empty() ? 1 : rho.front().dim(); }
  std::size_t generator_count() const { return epsilon.size(); }
};

long epsilon_of(const FreeWord& w, const TwistSpec& spec);

// t^e * M
struct WordImage {
  long t_exp = 0;
  ScalarMatrix mat;
};

// Caches rho and its inverses; evaluation is multiplicative on words.
class TwistEvaluator {
 public:
  explicit TwistEvaluator(const TwistSpec& spec);
  const TwistSpec& spec() const { return spec_; }
  WordImage image(const FreeWord& w) const;
  const ScalarMatrix& letter_matrix(int letter) const;
  long letter_epsilon(int letter) const;

 private:
  TwistSpec spec_;
  std::vector<ScalarMatrix> inv_;
};

struct ValidationResult {
  bool ok = true;
  std::string witness;
};

// Shapes, invertibility, the sign condition on epsilon, and that every
// relator evaluates to the identity block.
ValidationResult validate_representation(const Presentation& pres, const TwistSpec& spec,
                                         bool relaxed_epsilon = false);

// Checks epsilon(beta_k) != 0 for every singular point (relaxed mode).
ValidationResult check_loop_weights(const Presentation& pres, const TwistSpec& spec);

// X * rho(a_j) * X^-1 for all j.
TwistSpec conjugate_twist(const TwistSpec& spec, const ScalarMatrix& x);

}  // namespace arrangealex
