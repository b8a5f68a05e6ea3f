#include "arrangealex/corpus.hpp"

#include "arrangealex/error.hpp"

namespace arrangealex {

namespace {

AffineLine line(long a, long b, long c, long b_im = 0) {
  return {GaussianRational{Rational(a), Rational(0)}, GaussianRational{Rational(b), Rational(b_im)},
          GaussianRational{Rational(c), Rational(0)}};
}

std::vector<CorpusCase> build() {
  std::vector<CorpusCase> v;
  // H1: z1 - z2 = 1, H2: z1 - z2 = 0, H3: z1 - i z2 = 0, H4: z1 + 2 z2 = 0
  v.push_back({"four-line-tree", {{line(1, -1, -1), line(1, -1, 0), line(1, 0, 0, -1), line(1, 2, 0)}}, 0});
  v.push_back({"falk-a1", {{line(1, 0, 1), line(1, 0, -1), line(1, 1, 0), line(0, 1, 0), line(1, -1, 0)}}, 0});
  v.push_back({"falk-a2", {{line(1, 0, 1), line(1, 0, -1), line(0, 1, 1), line(0, 1, -1), line(1, -1, -1)}}, 0});
  v.push_back({"two-crossing-lines", {{line(1, 0, 0), line(0, 1, 0)}}, 0});
  v.push_back({"three-generic-lines", {{line(0, 1, 0), line(1, 0, 0), line(1, 1, -1)}}, 0});
  v.push_back({"pencil-4", {{line(0, 1, 0), line(1, 0, 0), line(1, -1, 0), line(1, 1, 0)}}, 0});
  v.push_back({"parallel-pair-transversal", {{line(0, 1, 0), line(0, 1, -1), line(1, 0, 0)}}, 0});
  return v;
}

Scalar q(long a, long b = 1) { return Scalar(make_rational(a, b)); }

}  // namespace

const std::vector<CorpusCase>& bundled_corpus() {
  static const std::vector<CorpusCase> corpus = build();
  return corpus;
}

const CorpusCase& corpus_case(const std::string& name) {
  for (const auto& c : bundled_corpus())
    if (c.name == name) return c;
  fail(ErrorCode::precondition, "no bundled arrangement named " + name);
}

TwistSpec trivial_twist(std::size_t m) {
  return {FieldConfig{1}, std::vector<long>(m, 1), std::vector<ScalarMatrix>(m, ScalarMatrix::identity(1))};
}

TwistSpec character_twist(long n, const std::vector<long>& c, const std::vector<long>& eps) {
  if (c.size() != eps.size()) fail(ErrorCode::shape_mismatch, "exponent and weight lists differ in length");
  TwistSpec s{FieldConfig{n}, eps, {}};
  for (long x : c) s.rho.push_back(ScalarMatrix::scalar(1, Scalar::zeta(n, x)));
  return s;
}

TwistSpec generic_character_twist(std::size_t m) {
  std::vector<long> c, eps;
  for (std::size_t j = 0; j < m; ++j) {
    c.push_back(static_cast<long>(j) + 1);
    eps.push_back(j % 2 ? 2 : 1);
  }
  return character_twist(7, c, eps);
}

TwistSpec two_dimensional_twist(const Arrangement& arr, const Presentation& pres) {
  const std::size_t m = arr.size();
  TwistSpec s{FieldConfig{1}, std::vector<long>(m, 1), {}};
  ScalarMatrix upper = ScalarMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}});
  ScalarMatrix lower = ScalarMatrix::from_rows({{q(2), q(0)}, {q(1), q(1)}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!parallel(arr.lines[i], arr.lines[j])) continue;
      // no singular point meets both, so every relation sees at most one
      // of the two free matrices next to scalars
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i) s.rho.push_back(upper);
        else if (k == j) s.rho.push_back(lower);
        else s.rho.push_back(ScalarMatrix::scalar(2, q(k % 2 ? -1 : 3, 2)));
      }
      return s;
    }
  if (pres.points.size() == 1) {
    // beta acts as a scalar when the last strand undoes the others
    const auto& words = pres.local_words[0];
    const auto& lines = pres.local_lines[0];
    for (std::size_t k = 0; k < words.size(); ++k)
      if (words[k] != FreeWord::generator(lines[k]))
        fail(ErrorCode::unsupported, "pencil twist needs unconjugated local meridians");
    std::vector<ScalarMatrix> free_ones{upper, lower, upper * lower * upper, lower * lower};
    s.rho.assign(m, ScalarMatrix());
    ScalarMatrix prod = ScalarMatrix::identity(2);
    for (std::size_t k = 0; k + 1 < lines.size(); ++k) {
      s.rho[lines[k]] = free_ones[k % free_ones.size()];
      prod = prod * s.rho[lines[k]];
    }
    s.rho[lines.back()] = ScalarMatrix::scalar(2, q(2)) * prod.inverse();
    return s;
  }
  bool abelian = true;
  for (const auto& p : pres.points) abelian = abelian && p.multiplicity() == 2;
  if (abelian) {
    // pi_1 is free abelian: conjugates of commuting diagonal matrices
    s.field = FieldConfig{5};
    ScalarMatrix x = ScalarMatrix::from_rows({{q(1), q(1)}, {q(1), q(2)}});
    ScalarMatrix xi = x.inverse();
    for (std::size_t k = 0; k < m; ++k) {
      auto d = ScalarMatrix::diagonal({Scalar::zeta(5, static_cast<long>(k) + 1), Scalar::zeta(5, 2 * static_cast<long>(k) + 3)});
      s.rho.push_back(x * d * xi);
    }
    return s;
  }
  fail(ErrorCode::unsupported, "no 2-dimensional representation recipe for this arrangement");
}

std::vector<NamedTwist> standard_twists(const Arrangement& arr, const Presentation& pres) {
  std::vector<NamedTwist> out{{"trivial", trivial_twist(arr.size())}, {"character", generic_character_twist(arr.size())}};
  try {
    out.push_back({"rank-two", two_dimensional_twist(arr, pres)});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::unsupported) throw;
  }
  return out;
}

}  // namespace arrangealex
