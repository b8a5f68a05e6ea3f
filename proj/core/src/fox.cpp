#include "arrangealex/fox.hpp"

#include "arrangealex/error.hpp"

namespace arrangealex {

void GroupRingElement::add(const FreeWord& w, long c) {
  if (c == 0) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
  } else if ((it->second += c) == 0) {
    t_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

GroupRingElement GroupRingElement::left_mul(const FreeWord& u) const {
  GroupRingElement g;
  for (const auto& [w, c] : t_) g.add(u * w, c);
  return g;
}

std::string to_string(const GroupRingElement& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : g.terms()) {
    long mag = c < 0 ? -c : c;
    std::string term = (mag == 1 ? "" : std::to_string(mag) + "*") + (w.empty() ? "1" : "(" + to_string(w) + ")");
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

GroupRingElement fox_derivative(const FreeWord& w, std::size_t j) {
  GroupRingElement g;
  const auto& l = w.letters();
  std::vector<int> prefix;
  for (int x : l) {
    bool hit = static_cast<std::size_t>(FreeWord::letter_generator(x)) == j;
    if (hit && x > 0) g.add(FreeWord::from_letters(prefix), 1);
    prefix.push_back(x);
    if (hit && x < 0) g.add(FreeWord::from_letters(prefix), -1);
  }
  return g;
}

PolyMatrix scalar_block(const WordImage& img) {
  std::size_t d = img.mat.dim();
  PolyMatrix b(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) b(i, k) = LaurentPoly::monomial(img.mat(i, k), img.t_exp);
  return b;
}

PolyMatrix evaluate(const FreeWord& w, const TwistEvaluator& ev) { return scalar_block(ev.image(w)); }

PolyMatrix evaluate(const GroupRingElement& g, const TwistEvaluator& ev) {
  std::size_t d = ev.spec().dim();
  PolyMatrix acc(d, d);
  for (const auto& [w, c] : g.terms()) {
    PolyMatrix b = evaluate(w, ev);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) acc(i, k) += b(i, k) * Scalar(c);
  }
  return acc;
}

namespace {

void add_image(PolyMatrix& m, std::size_t i0, std::size_t j0, const WordImage& img, long sign) {
  std::size_t d = img.mat.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& s = img.mat(i, k);
      if (s.is_zero()) continue;
      m(i0 + i, j0 + k) += LaurentPoly::monomial(sign > 0 ? s : -s, img.t_exp);
    }
}

}  // namespace

TwistedChainComplex build_complex(const Presentation& pres, const TwistSpec& spec) {
  TwistEvaluator ev(spec);
  std::size_t m = pres.generator_count, d = spec.dim(), R = pres.relations.size();
  if (spec.epsilon.size() != m) fail(ErrorCode::shape_mismatch, "twist and presentation disagree on generator count");
  TwistedChainComplex cx{PolyMatrix(R * d, m * d), PolyMatrix(m * d, d)};
  // Fox derivatives evaluated along the relator: the prefix image is
  // carried letter by letter instead of expanding group ring elements.
  for (std::size_t r = 0; r < R; ++r) {
    FreeWord rel = pres.relations[r].relator();
    WordImage prefix{0, ScalarMatrix::identity(d)};
    for (int x : rel.letters()) {
      std::size_t g = FreeWord::letter_generator(x);
      if (x > 0) add_image(cx.d2, r * d, g * d, prefix, +1);
      prefix.t_exp += ev.letter_epsilon(x);
      prefix.mat = prefix.mat * ev.letter_matrix(x);
      if (x < 0) add_image(cx.d2, r * d, g * d, prefix, -1);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    add_image(cx.d1, j * d, 0, {spec.epsilon[j], spec.rho[j]}, +1);
    for (std::size_t i = 0; i < d; ++i) cx.d1(j * d + i, i) -= LaurentPoly(1);
  }
  if (!(cx.d2 * cx.d1).is_zero()) fail(ErrorCode::internal, "twisted complex: d1 o d2 != 0");
  return cx;
}

Delta0Result delta0_of(const TwistedChainComplex& cx, std::size_t dim) {
  Delta0Result r;
  r.value = smith_normal_form(cx.d1).torsion_order();
  if (count_minors(cx.d1.rows(), cx.d1.cols(), dim) <= 10000) r.minors = gcd_of_minors(cx.d1, dim);
  return r;
}

Delta1Result delta1_of(const TwistedChainComplex& cx) {
  HomologyOrder h = homology_torsion_order(cx.d2, cx.d1);
  return {h.torsion, h.free_rank};
}

std::size_t h2_free_rank_of(const TwistedChainComplex& cx) { return cx.d2.rows() - rank(cx.d2); }

CanonicalPoly delta0(const Presentation& pres, const TwistSpec& spec) {
  return delta0_of(build_complex(pres, spec), spec.dim()).value;
}

Delta1Result delta1(const Presentation& pres, const TwistSpec& spec) { return delta1_of(build_complex(pres, spec)); }

std::size_t h2_free_rank(const Presentation& pres, const TwistSpec& spec) {
  return h2_free_rank_of(build_complex(pres, spec));
}

LaurentPoly char_det(const WordImage& img) {
  PolyMatrix m = scalar_block(img);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= LaurentPoly(1);
  return determinant(m);
}

CanonicalPoly delta0_rank_one(const TwistSpec& spec) {
  if (spec.dim() != 1) fail(ErrorCode::precondition, "rank-one formula needs a 1-dimensional twist");
  LaurentPoly acc;
  for (std::size_t j = 0; j < spec.epsilon.size(); ++j) {
    LaurentPoly f = char_det({spec.epsilon[j], spec.rho[j]});
    acc = acc.is_zero() ? f : gcd(acc, f).poly();
  }
  return normalize(acc);
}

}  // namespace arrangealex
