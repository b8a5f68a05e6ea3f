#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<Perm> symmetric_group(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

std::uint64_t count_homs(const Presentation& p, int n) {
  auto g = symmetric_group(n);
  std::vector<Perm> inv;
  for (const auto& x : g) inv.push_back(inverse(x));
  std::vector<FreeWord> rel;
  for (const auto& r : p.relations) rel.push_back(r.relator());
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::size_t> pick(p.generator_count, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& w : rel) {
      Perm acc = id;
      for (int x : w.letters()) {
        std::size_t k = pick[FreeWord::letter_generator(x)];
        acc = compose(acc, x > 0 ? g[k] : inv[k]);
      }
      if (acc != id) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == g.size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return count;
}

PolyMatrix fox_matrix_expanded(const Presentation& p, const TwistSpec& spec) {
  TwistEvaluator ev(spec);
  std::size_t d = spec.dim(), m = p.generator_count;
  PolyMatrix out(p.relations.size() * d, m * d);
  for (std::size_t r = 0; r < p.relations.size(); ++r)
    for (std::size_t j = 0; j < m; ++j) out.set_block(r * d, j * d, evaluate(fox_derivative(p.relations[r].relator(), j), ev));
  return out;
}

LaurentPoly laplace_det(const PolyMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m(0, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    LaurentPoly term = m(0, j) * laplace_det(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CanonicalPoly fitting_gcd(const PolyMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  LaurentPoly g;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      PolyMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      LaurentPoly det = laplace_det(sub);
      if (det.is_zero()) continue;
      g = g.is_zero() ? det : gcd(g, det).poly();
    }
  return normalize(g);
}

}  // namespace oracle
