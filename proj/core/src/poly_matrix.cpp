#include "arrangealex/poly_matrix.hpp"

#include <limits>
#include <sstream>

#include "arrangealex/error.hpp"

namespace arrangealex {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

void PolyMatrix::set_block(std::size_t i0, std::size_t j0, const PolyMatrix& b) {
  if (i0 + b.r_ > r_ || j0 + b.c_ > c_) fail(ErrorCode::shape_mismatch, "block out of range");
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

PolyMatrix PolyMatrix::block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const {
  if (i0 + rows > r_ || j0 + cols > c_) fail(ErrorCode::shape_mismatch, "block out of range");
  PolyMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
  return b;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.c_ != b.r_) fail(ErrorCode::shape_mismatch, "matrix product shapes");
  PolyMatrix p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
    }
  return p;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorCode::shape_mismatch, "matrix sum shapes");
  PolyMatrix s = a;
  for (std::size_t k = 0; k < s.e_.size(); ++k) s.e_[k] += b.e_[k];
  return s;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorCode::shape_mismatch, "matrix difference shapes");
  PolyMatrix s = a;
  for (std::size_t k = 0; k < s.e_.size(); ++k) s.e_[k] -= b.e_[k];
  return s;
}

void PolyMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void PolyMatrix::swap_cols(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t r = 0; r < r_; ++r) std::swap((*this)(r, i), (*this)(r, k));
}

void PolyMatrix::add_row_multiple(std::size_t i, std::size_t k, const LaurentPoly& q) {
  if (q.is_zero()) return;
  for (std::size_t j = 0; j < c_; ++j)
    if (!(*this)(k, j).is_zero()) (*this)(i, j) += q * (*this)(k, j);
}

void PolyMatrix::add_col_multiple(std::size_t i, std::size_t k, const LaurentPoly& q) {
  if (q.is_zero()) return;
  for (std::size_t r = 0; r < r_; ++r)
    if (!(*this)(r, k).is_zero()) (*this)(r, i) += q * (*this)(r, k);
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::shape_mismatch, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  PolyMatrix a = m;
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return LaurentPoly();
      a.swap_rows(k, piv);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = divide_exact(v, prev);
        if (!q) fail(ErrorCode::internal, "Bareiss step not exact");
        a(i, j) = std::move(*q);
      }
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

struct Echelon {
  PolyMatrix e;
  PolyMatrix p;     // p * input = e
  PolyMatrix pinv;  // p^-1
  std::size_t rank = 0;
};

// Row echelon form by Euclidean row operations over F[t^±1]; the
// transforms stay unimodular so kernels come out as ring bases.
Echelon row_echelon(const PolyMatrix& a, bool track) {
  Echelon out;
  out.e = a;
  std::size_t n = a.rows();
  if (track) {
    out.p = PolyMatrix::identity(n);
    out.pinv = PolyMatrix::identity(n);
  }
  PolyMatrix& e = out.e;
  std::size_t p = 0;
  for (std::size_t j = 0; j < a.cols() && p < n; ++j) {
    bool found = false;
    while (true) {
      std::size_t best = n;
      for (std::size_t i = p; i < n; ++i) {
        if (e(i, j).is_zero()) continue;
        if (best == n || e(i, j).spread() < e(best, j).spread()) best = i;
      }
      if (best == n) break;
      found = true;
      e.swap_rows(p, best);
      if (track) {
        out.p.swap_rows(p, best);
        out.pinv.swap_cols(p, best);
      }
      bool clean = true;
      for (std::size_t i = p + 1; i < n; ++i) {
        if (e(i, j).is_zero()) continue;
        LaurentPoly q = divmod(e(i, j), e(p, j)).quotient;
        e.add_row_multiple(i, p, -q);
        if (track) {
          out.p.add_row_multiple(i, p, -q);
          out.pinv.add_col_multiple(p, i, q);
        }
        if (!e(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (found) ++p;
  }
  out.rank = p;
  return out;
}

}  // namespace

std::size_t rank(const PolyMatrix& m) { return row_echelon(m, false).rank; }

CanonicalPoly SnfResult::torsion_order() const {
  CanonicalPoly acc;
  for (const auto& f : invariant_factors) acc *= f;
  return acc;
}

SnfResult smith_normal_form(const PolyMatrix& input) {
  PolyMatrix a = input;
  std::size_t r = a.rows(), c = a.cols();
  std::size_t t = 0;
  SnfResult out;
  while (t < r && t < c) {
    // pivot: smallest nonzero entry of the trailing block
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (!a(i, j).is_zero() && (bi == r || a(i, j).spread() < a(bi, bj).spread())) {
          bi = i;
          bj = j;
        }
    if (bi == r) break;
    a.swap_rows(t, bi);
    a.swap_cols(t, bj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t).is_zero()) continue;
        a.add_row_multiple(i, t, -divmod(a(i, t), a(t, t)).quotient);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j).is_zero()) continue;
        a.add_col_multiple(j, t, -divmod(a(t, j), a(t, t)).quotient);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t; i < r; ++i)
          if (!a(i, t).is_zero() && a(i, t).spread() < a(bi2, bj2).spread()) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t; j < c; ++j)
          if (!a(t, j).is_zero() && a(t, j).spread() < a(bi2, bj2).spread()) {
            bi2 = t;
            bj2 = j;
          }
        a.swap_rows(t, bi2);
        a.swap_cols(t, bj2);
        continue;
      }
      // divisibility of the rest of the block
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!a(i, j).is_zero() && !divides(a(t, t), a(i, j))) {
            bad = i;
            break;
          }
      if (bad == r) break;
      a.add_row_multiple(t, bad, LaurentPoly(1));
    }
    out.invariant_factors.push_back(normalize(a(t, t)));
    ++t;
  }
  out.rank = t;
  out.zero_cokernel_rank = c - t;
  return out;
}

PolyMatrix left_kernel_basis(const PolyMatrix& m) {
  Echelon ech = row_echelon(m, true);
  std::size_t n = m.rows();
  return ech.p.block(ech.rank, 0, n - ech.rank, n);
}

HomologyOrder homology_torsion_order(const PolyMatrix& d_in, const PolyMatrix& d_out) {
  if (d_in.cols() != d_out.rows())
    fail(ErrorCode::shape_mismatch, "homology: d_in has " + std::to_string(d_in.cols()) +
                                        " columns but d_out has " + std::to_string(d_out.rows()) + " rows");
  if (!(d_in * d_out).is_zero()) fail(ErrorCode::precondition, "homology: d_out o d_in is not zero");
  std::size_t n1 = d_out.rows();
  PolyMatrix coords;
  std::size_t k;
  if (d_out.is_zero()) {
    coords = d_in;
    k = n1;
  } else {
    Echelon ech = row_echelon(d_out, true);
    k = n1 - ech.rank;
    PolyMatrix full = d_in * ech.pinv;
    for (std::size_t i = 0; i < full.rows(); ++i)
      for (std::size_t j = 0; j < ech.rank; ++j)
        if (!full(i, j).is_zero()) fail(ErrorCode::internal, "image not inside the kernel");
    coords = full.block(0, ech.rank, full.rows(), k);
  }
  HomologyOrder h;
  if (k == 0) return h;
  SnfResult snf = smith_normal_form(coords);
  h.torsion = snf.torsion_order();
  h.free_rank = k - snf.rank;
  return h;
}

std::size_t count_minors(std::size_t rows, std::size_t cols, std::size_t k) {
  auto binom = [](std::size_t n, std::size_t r) -> long double {
    if (r > n) return 0;
    long double acc = 1;
    for (std::size_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
  };
  long double total = binom(rows, k) * binom(cols, k);
  if (total > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(total + 0.5L);
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

CanonicalPoly gcd_of_minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0) return CanonicalPoly::one();
  if (k > m.rows() || k > m.cols()) fail(ErrorCode::precondition, "minor size exceeds matrix");
  std::vector<std::size_t> ri(k), ci(k);
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  LaurentPoly acc;
  bool any = false;
  PolyMatrix sub(k, k);
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
      LaurentPoly d = determinant(sub);
      if (d.is_zero()) continue;
      acc = any ? gcd(acc, d).poly() : normalize(d).poly();
      any = true;
      if (acc.spread() == 0) return CanonicalPoly::one();
    } while (next_combination(ci, m.cols()));
  } while (next_combination(ri, m.rows()));
  if (!any) fail(ErrorCode::precondition, "all minors vanish");
  return normalize(acc);
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace arrangealex
