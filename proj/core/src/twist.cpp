#include "arrangealex/twist.hpp"

#include <sstream>

#include "arrangealex/error.hpp"

namespace arrangealex {

ScalarMatrix ScalarMatrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

ScalarMatrix ScalarMatrix::scalar(std::size_t n, const Scalar& s) {
  ScalarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

ScalarMatrix ScalarMatrix::diagonal(const std::vector<Scalar>& d) {
  ScalarMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  ScalarMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) fail(ErrorCode::shape_mismatch, "representation matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::shape_mismatch, "matrix dimensions differ");
  std::size_t n = a.n_;
  ScalarMatrix p(n);
  if (n == 1) {
    p.e_[0] = a.e_[0] * b.e_[0];
    return p;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Scalar ScalarMatrix::determinant() const {
  ScalarMatrix a = *this;
  Scalar det(1);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t piv = k;
    while (piv < n_ && a(piv, k).is_zero()) ++piv;
    if (piv == n_) return Scalar(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n_; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

ScalarMatrix ScalarMatrix::inverse() const {
  std::size_t n = n_;
  ScalarMatrix a = *this, inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) fail(ErrorCode::invalid_representation, "representation matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    Scalar s = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= s;
      inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Scalar f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

bool ScalarMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

std::string to_string(const ScalarMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

long epsilon_of(const FreeWord& w, const TwistSpec& spec) {
  long e = 0;
  for (int x : w.letters()) {
    std::size_t g = FreeWord::letter_generator(x);
    if (g >= spec.epsilon.size()) fail(ErrorCode::shape_mismatch, "word uses a generator without a weight");
    e += x > 0 ? spec.epsilon[g] : -spec.epsilon[g];
  }
  return e;
}

TwistEvaluator::TwistEvaluator(const TwistSpec& spec) : spec_(spec) {
  if (spec.rho.size() != spec.epsilon.size())
    fail(ErrorCode::shape_mismatch, "twist has " + std::to_string(spec.epsilon.size()) + " weights but " +
                                        std::to_string(spec.rho.size()) + " matrices");
  for (const auto& r : spec.rho) {
    if (r.dim() != spec.dim()) fail(ErrorCode::shape_mismatch, "representation matrices of different sizes");
    inv_.push_back(r.inverse());
  }
}

const ScalarMatrix& TwistEvaluator::letter_matrix(int letter) const {
  std::size_t g = FreeWord::letter_generator(letter);
  if (g >= inv_.size()) fail(ErrorCode::shape_mismatch, "word uses a generator without a matrix");
  return letter > 0 ? spec_.rho[g] : inv_[g];
}

long TwistEvaluator::letter_epsilon(int letter) const {
  std::size_t g = FreeWord::letter_generator(letter);
  return letter > 0 ? spec_.epsilon[g] : -spec_.epsilon[g];
}

WordImage TwistEvaluator::image(const FreeWord& w) const {
  WordImage img{0, ScalarMatrix::identity(spec_.dim())};
  for (int x : w.letters()) {
    img.t_exp += letter_epsilon(x);
    img.mat = img.mat * letter_matrix(x);
  }
  return img;
}

static void check_field(const TwistSpec& spec) {
  for (const auto& r : spec.rho)
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j) {
        const Scalar& s = r(i, j);
        if (!s.is_rational() && s.conductor() != spec.field.conductor)
          fail(ErrorCode::field_mismatch, "matrix entry " + to_string(s) + " lies outside " + spec.field.name());
      }
}

ValidationResult validate_representation(const Presentation& pres, const TwistSpec& spec, bool relaxed_epsilon) {
  if (spec.epsilon.size() != pres.generator_count)
    fail(ErrorCode::shape_mismatch, "twist has " + std::to_string(spec.epsilon.size()) +
                                        " weights for " + std::to_string(pres.generator_count) + " generators");
  check_field(spec);
  for (std::size_t j = 0; j < spec.epsilon.size(); ++j) {
    long e = spec.epsilon[j];
    if (relaxed_epsilon ? e == 0 : e <= 0)
      return {false, "epsilon(a" + std::to_string(j + 1) + ") = " + std::to_string(e) +
                         (relaxed_epsilon ? " must be nonzero" : " must be positive")};
  }
  TwistEvaluator ev(spec);
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    FreeWord rel = pres.relations[r].relator();
    WordImage img = ev.image(rel);
    if (img.t_exp != 0 || !img.mat.is_identity())
      return {false, "relator " + std::to_string(r + 1) + " [" + to_string(pres.relations[r].beta) + ", " +
                         to_string(pres.relations[r].b) + "] evaluates to t^" + std::to_string(img.t_exp) + " * " +
                         to_string(img.mat)};
  }
  return {};
}

ValidationResult check_loop_weights(const Presentation& pres, const TwistSpec& spec) {
  for (std::size_t k = 0; k < pres.beta.size(); ++k)
    if (epsilon_of(pres.beta[k], spec) == 0)
      return {false, "epsilon vanishes on the loop around singular point " + std::to_string(k + 1)};
  return {};
}

TwistSpec conjugate_twist(const TwistSpec& spec, const ScalarMatrix& x) {
  TwistSpec out = spec;
  ScalarMatrix xi = x.inverse();
  for (auto& r : out.rho) r = x * r * xi;
  return out;
}

}  // namespace arrangealex
