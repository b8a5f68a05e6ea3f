#pragma once

#include <cstddef>
#include <vector>

#include "arrangealex/laurent.hpp"

namespace arrangealex {

// Dense matrix over F[t, t^-1]. Row vectors are the convention throughout:
// a map C_k -> C_{k-1} is x |-> x * M.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  bool is_zero() const;
  void set_block(std::size_t i0, std::size_t j0, const PolyMatrix& b);
  PolyMatrix block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const;
  PolyMatrix transposed() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t i, std::size_t k);
  // row_i += q * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const LaurentPoly& q);
  // col_i += q * col_k
  void add_col_multiple(std::size_t i, std::size_t k, const LaurentPoly& q);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<LaurentPoly> e_;
};

LaurentPoly determinant(const PolyMatrix& m);

// Rank over the fraction field F(t).
std::size_t rank(const PolyMatrix& m);

struct SnfResult {
  std::vector<CanonicalPoly> invariant_factors;  // nonzero diagonal, normalized
  std::size_t rank = 0;
  // Free rank of coker(x |-> x*M) = cols - rank.
  std::size_t zero_cokernel_rank = 0;
  CanonicalPoly torsion_order() const;
};

SnfResult smith_normal_form(const PolyMatrix& m);

struct HomologyOrder {
  CanonicalPoly torsion;
  std::size_t free_rank = 0;
};

// Order of the torsion of ker(d_out) / im(d_in) together with its free rank.
// Shapes: d_in is n2 x n1, d_out is n1 x n0, and d_in * d_out must vanish.
HomologyOrder homology_torsion_order(const PolyMatrix& d_in, const PolyMatrix& d_out);

// A basis over F[t^±1] of the left kernel {x : x*M = 0}, one row per vector.
PolyMatrix left_kernel_basis(const PolyMatrix& m);

// gcd of all k x k minors; 1 when k = 0, zero polynomial never returned
// (throws precondition when every minor vanishes).
CanonicalPoly gcd_of_minors(const PolyMatrix& m, std::size_t k);
std::size_t count_minors(std::size_t rows, std::size_t cols, std::size_t k);

std::string to_string(const PolyMatrix& m);

}  // namespace arrangealex
