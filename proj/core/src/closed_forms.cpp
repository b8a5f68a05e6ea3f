#include "arrangealex/closed_forms.hpp"

#include <algorithm>

#include "arrangealex/error.hpp"
#include "arrangealex/io.hpp"

namespace arrangealex {

CanonicalPoly FactoredPoly::product() const {
  CanonicalPoly p = CanonicalPoly::one();
  for (const auto& f : factors) {
    if (f.exponent < 0) fail(ErrorCode::internal, "negative exponent in factored polynomial");
    p *= f.base.pow(static_cast<unsigned long>(f.exponent));
  }
  return p;
}

FactoredPoly FactoredPoly::merged() const {
  FactoredPoly out;
  for (const auto& f : factors) {
    if (f.exponent == 0 || f.base.is_one()) continue;
    bool hit = false;
    for (auto& g : out.factors) {
      if (g.base == f.base) {
        g.exponent += f.exponent;
        hit = true;
        break;
      }
    }
    if (!hit) out.factors.push_back(f);
  }
  return out;
}

std::string to_string(const FactoredPoly& f) {
  std::string out;
  for (const auto& x : f.factors) {
    if (x.exponent == 0 || x.base.is_one()) continue;
    if (!out.empty()) out += " * ";
    out += "(" + to_string(x.base) + ")";
    if (x.exponent != 1) out += "^" + std::to_string(x.exponent);
  }
  return out.empty() ? "1" : out;
}

ClosedForms::ClosedForms(Arrangement arr, Presentation pres, TwistSpec spec)
    : arr_(std::move(arr)), pres_(std::move(pres)), spec_(std::move(spec)) {
  inc_ = incidence_summary(arr_);
  if (spec_.generator_count() != arr_.size()) fail(ErrorCode::shape_mismatch, "twist has the wrong number of generators");
  delta0_ = arrangealex::delta0(pres_, spec_);
}

ClosedForms::ClosedForms(const Arrangement& arr, const TwistSpec& spec, std::uint64_t seed)
    : ClosedForms(arr, arrangealex::presentation(arr, seed), spec) {}

namespace {

CanonicalPoly loop_base(const WordImage& img, const std::string& label) {
  LaurentPoly f = char_det(img);
  if (f.is_zero()) fail(ErrorCode::precondition, "loop " + label + " has vanishing determinant factor (zero epsilon weight)");
  return normalize(f);
}

}  // namespace

Factor ClosedForms::word_factor(std::string label, const FreeWord& w, long exponent) const {
  TwistEvaluator ev(spec_);
  Factor f{std::move(label), CanonicalPoly::one(), exponent, w.abelianization(arr_.size())};
  if (exponent != 0) f.base = loop_base(ev.image(w), f.label);
  return f;
}

Factor ClosedForms::abelian_factor(std::string label, const std::vector<long>& loop, long exponent) const {
  if (spec_.dim() != 1) fail(ErrorCode::unsupported, "abelian loop images need a 1-dimensional twist");
  WordImage img{0, ScalarMatrix::identity(1)};
  Scalar v(1);
  for (std::size_t j = 0; j < loop.size(); ++j) {
    img.t_exp += loop[j] * spec_.epsilon[j];
    v = v * spec_.rho[j](0, 0).pow(loop[j]);
  }
  img.mat(0, 0) = v;
  Factor f{std::move(label), CanonicalPoly::one(), exponent, loop};
  if (exponent != 0) f.base = loop_base(img, f.label);
  return f;
}

Factor ClosedForms::point_factor(std::size_t k, long exponent) const {
  return word_factor("beta" + std::to_string(k + 1), pres_.beta.at(k), exponent);
}

Factor ClosedForms::line_factor(std::size_t i, long exponent) const {
  return word_factor("a" + std::to_string(i + 1), FreeWord::generator(i), exponent);
}

std::vector<Factor> ClosedForms::point_and_line_factors() const {
  std::vector<Factor> out;
  for (std::size_t k = 0; k < pres_.points.size(); ++k)
    out.push_back(point_factor(k, static_cast<long>(pres_.points[k].multiplicity()) - 2));
  for (std::size_t i = 0; i < arr_.size(); ++i) out.push_back(line_factor(i, static_cast<long>(inc_.s_i[i]) - 1));
  return out;
}

CanonicalPoly ClosedForms::gcd_of_line_factors() const {
  CanonicalPoly g = line_factor(0, 1).base;
  for (std::size_t i = 1; i < arr_.size(); ++i) g = gcd(g, line_factor(i, 1).base);
  return g;
}

FactoredPoly ClosedForms::delta1_wstar() const {
  FactoredPoly f{point_and_line_factors()};
  f.factors.push_back({"delta0", delta0_, 1, std::nullopt});
  return f;
}

FactoredPoly ClosedForms::divisor_bound() const {
  FactoredPoly f{point_and_line_factors()};
  f.factors.push_back({"gcd_a", gcd_of_line_factors(), 1, std::nullopt});
  return f;
}

std::optional<FactoredPoly> ClosedForms::refined_bound() const {
  std::vector<std::size_t> lines = parallel_free_lines(arr_);
  if (lines.empty()) return std::nullopt;
  std::optional<CanonicalPoly> g;
  for (std::size_t i : lines) {
    FactoredPoly x;
    for (std::size_t k = 0; k < pres_.points.size(); ++k) {
      const auto& inc = pres_.points[k].incident;
      if (std::find(inc.begin(), inc.end(), i) == inc.end()) continue;
      x.factors.push_back(point_factor(k, static_cast<long>(inc.size()) - 2));
    }
    x.factors.push_back(line_factor(i, static_cast<long>(inc_.s_i[i]) - 1));
    CanonicalPoly p = x.product();
    g = g ? gcd(*g, p) : p;
  }
  FactoredPoly f;
  f.factors.push_back({"gcd_a", gcd_of_line_factors(), 1, std::nullopt});
  f.factors.push_back({"gcd_lines", *g, 1, std::nullopt});
  return f;
}

std::optional<FactoredPoly> ClosedForms::boundary_ratio() const {
  if (spec_.dim() != 1) return std::nullopt;
  const std::size_t m = arr_.size();
  ProjectiveCompletion pc = projectivize(arr_);
  FactoredPoly f;
  for (std::size_t k = 0; k < pres_.points.size(); ++k)
    f.factors.push_back(point_factor(k, static_cast<long>(pres_.points[k].multiplicity()) - 2));
  // a0 = (a1...am)^-1; at infinity the loop is the class product times a0
  for (std::size_t c = 0; c < pc.direction_classes.size(); ++c) {
    std::vector<long> loop(m, -1);
    for (std::size_t j : pc.direction_classes[c]) loop[j] += 1;
    f.factors.push_back(abelian_factor("inf" + std::to_string(c + 1), loop,
                                       static_cast<long>(pc.infinity_multiplicity[c]) - 2));
  }
  f.factors.push_back(abelian_factor("a0", std::vector<long>(m, -1), static_cast<long>(pc.s_tilde[0]) - 2));
  for (std::size_t i = 0; i < m; ++i)
    f.factors.push_back(line_factor(i, static_cast<long>(pc.s_tilde[i + 1]) - 2));
  return f.merged();
}

FactoredPoly ClosedForms::infinity_root_bound() const {
  FactoredPoly f;
  for (std::size_t k = 0; k < pres_.points.size(); ++k) f.factors.push_back(point_factor(k, 1));
  for (std::size_t i = 0; i < arr_.size(); ++i) f.factors.push_back(line_factor(i, 1));
  return f;
}

TorsionRatioVerdict ClosedForms::torsion_ratio_check() const {
  TorsionRatioVerdict v;
  v.closed_ratio = FactoredPoly{point_and_line_factors()}.product();
  v.wstar_consistent = delta1_wstar().product() == v.closed_ratio * delta0_;
  v.pieces_delta1 = v.pieces_delta0 = CanonicalPoly::one();
  TwistEvaluator ev(spec_);
  const std::size_t d = spec_.dim();
  // neighbourhood of a singular point: <x_1..x_n | [x_1...x_n, x_j]>
  for (std::size_t k = 0; k < pres_.points.size(); ++k) {
    const auto& words = pres_.local_words[k];
    const std::size_t n = words.size();
    Presentation local;
    local.generator_count = n;
    FreeWord beta;
    for (std::size_t j = 0; j < n; ++j) beta *= FreeWord::generator(j);
    for (std::size_t j = 0; j + 1 < n; ++j) local.relations.push_back({beta, FreeWord::generator(j), 0});
    TwistSpec ls{spec_.field, {}, {}};
    for (const auto& w : words) {
      WordImage img = ev.image(w);
      ls.epsilon.push_back(img.t_exp);
      ls.rho.push_back(img.mat);
    }
    auto cx = build_complex(local, ls);
    v.pieces_delta1 *= delta1_of(cx).value;
    v.pieces_delta0 *= delta0_of(cx, d).value;
  }
  // punctured line times a circle: <b_1..b_s, a | [b_j, a]>, rho(b_j) = id
  for (std::size_t i = 0; i < arr_.size(); ++i) {
    std::size_t s = inc_.s_i[i];
    Presentation piece = surface_times_circle(s);
    TwistSpec ps{spec_.field, {}, {}};
    std::size_t seen = 0;
    for (std::size_t k = 0; k < pres_.points.size() && seen < s; ++k) {
      const auto& inc = pres_.points[k].incident;
      if (std::find(inc.begin(), inc.end(), i) == inc.end()) continue;
      ps.epsilon.push_back(ev.image(pres_.beta[k]).t_exp);
      ps.rho.push_back(ScalarMatrix::identity(d));
      ++seen;
    }
    ps.epsilon.push_back(spec_.epsilon[i]);
    ps.rho.push_back(spec_.rho[i]);
    auto cx = build_complex(piece, ps);
    v.pieces_delta1 *= delta1_of(cx).value;
    v.pieces_delta0 *= delta0_of(cx, d).value;
  }
  v.ok = v.wstar_consistent && v.closed_ratio * v.pieces_delta0 == v.pieces_delta1;
  return v;
}

ClosedFormReport closed_form_report(const ClosedForms& cf) {
  ClosedFormReport r;
  r.delta1_wstar_factored = cf.delta1_wstar();
  r.divisor_bound_factored = cf.divisor_bound();
  r.refined_bound_factored = cf.refined_bound();
  r.boundary_ratio_factored = cf.boundary_ratio();
  r.infinity_bound_factored = cf.infinity_root_bound();
  r.delta1_wstar = r.delta1_wstar_factored.product();
  r.divisor_bound = r.divisor_bound_factored.product();
  if (r.refined_bound_factored) r.refined_bound = r.refined_bound_factored->product();
  if (r.boundary_ratio_factored) r.boundary_ratio = r.boundary_ratio_factored->product();
  r.infinity_bound = r.infinity_bound_factored.product();
  r.arrangement_hash = digest(cf.arrangement());
  r.spec_hash = digest(cf.spec());
  return r;
}

}  // namespace arrangealex
