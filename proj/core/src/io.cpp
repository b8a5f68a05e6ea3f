#include "arrangealex/io.hpp"

#include <cstdio>
#include <json.hpp>

#include "arrangealex/error.hpp"
#include "arrangealex/rational.hpp"

namespace arrangealex {

using Json = nlohmann::ordered_json;

namespace {

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

GaussianRational gaussian_of(const Json& v) {
  if (v.is_number_integer()) return GaussianRational{Rational(v.get<long>()), Rational(0)};
  if (v.is_string()) return parse_gaussian(v.get<std::string>());
  fail(ErrorCode::parse_error, "line coefficient must be an integer or a string, got " + v.dump());
}

Rational rational_of(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(ErrorCode::parse_error, "expected a rational, got " + v.dump());
}

Scalar scalar_of(const Json& v, long conductor) {
  Scalar s;
  if (v.is_number_integer()) {
    s = Scalar(v.get<long>());
  } else if (v.is_string()) {
    s = parse_scalar(v.get<std::string>());
  } else if (v.is_object() && v.contains("zeta")) {
    if (!v["zeta"].is_number_integer()) fail(ErrorCode::parse_error, "zeta exponent must be an integer");
    s = Scalar::zeta(conductor, v["zeta"].get<long>());
  } else if (v.is_object() && v.contains("coeffs")) {
    long n = v.value("conductor", conductor);
    std::vector<Rational> c;
    for (const auto& x : v["coeffs"]) c.push_back(rational_of(x));
    s = Scalar::from_coeffs(n, std::move(c));
  } else {
    fail(ErrorCode::parse_error, "cannot read a field element from " + v.dump());
  }
  if (s.is_rational()) return s.rational_part();
  if (s.conductor() != conductor) {
    if (conductor % s.conductor() != 0)
      fail(ErrorCode::field_mismatch, "element of Q(zeta_" + std::to_string(s.conductor()) +
                                          ") outside the twist field Q(zeta_" + std::to_string(conductor) + ")");
    s = s.embed(conductor);
  }
  return s;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json poly_value(const CanonicalPoly& p) {
  Json terms = Json::array();
  const LaurentPoly& q = p.poly();
  for (long e = q.valuation(); !q.is_zero() && e <= q.top(); ++e) {
    Scalar c = q.coeff(e);
    if (!c.is_zero()) terms.push_back(Json::array({e, to_string(c)}));
  }
  return Json{{"canonical", to_string(p)}, {"degree", p.degree()}, {"terms", terms}};
}

Json factored_value(const FactoredPoly& f) {
  Json out = Json::array();
  for (const auto& x : f.factors) {
    if (x.exponent == 0) continue;
    Json j{{"label", x.label}, {"base", to_string(x.base)}, {"exponent", x.exponent}};
    if (x.loop) j["loop"] = *x.loop;
    out.push_back(j);
  }
  return out;
}

Json rational_point(const PathPoint& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json one_based(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x + 1);
  return a;
}

Json frame_value(const GenericFrame& f) {
  Json path = Json::array();
  for (const auto& p : f.path) path.push_back(rational_point(p));
  return Json{{"shear", to_string(f.shear)}, {"seed", f.seed}, {"attempts", f.attempts},
              {"base", rational_point(f.base)}, {"half_width", to_string(f.half_width)}, {"path", path}};
}

Json assumptions_value(const AssumptionReport& rep) {
  Json a = Json::array();
  for (const auto& r : rep.results) {
    Json j{{"name", r.name}, {"passed", r.passed}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    a.push_back(j);
  }
  return a;
}

Json locus_value(const LocusDescriptor& d) {
  Json roots = Json::array();
  for (const auto& u : d.roots_of_unity) {
    Json j{{"order", u.order}, {"count", u.count}};
    if (!u.exponents.empty()) {
      Json named = Json::array();
      for (std::size_t i = 0; i < u.exponents.size(); ++i)
        named.push_back(Json{{"root", root_name(u.order, u.exponents[i])}, {"multiplicity", u.multiplicities[i]}});
      j["roots"] = named;
    }
    roots.push_back(j);
  }
  return Json{{"radical", to_string(d.radical)}, {"roots_of_unity", roots}, {"other_roots", d.other_roots}};
}

Json roots_value(const RootMultiset& rm) {
  Json a = Json::array();
  for (const auto& [k, c] : rm.counts) a.push_back(Json{{"root", root_name(rm.modulus, k)}, {"multiplicity", c}});
  return Json{{"modulus", rm.modulus}, {"total", rm.total()}, {"roots", a}};
}

Json profile_value(const ParityProfile& p) {
  Json odd = Json::array(), hist = Json::object();
  for (const auto& [k, c] : p.odd_multiplicities) odd.push_back(Json::array({k, c}));
  for (const auto& [mult, n] : p.multiplicity_histogram) hist[std::to_string(mult)] = n;
  return Json{{"all_even", p.all_even}, {"odd_multiplicities", odd}, {"multiplicity_histogram", hist}};
}

Json envelope(const char* kind) { return Json{{"schema", kSchema}, {"kind", kind}}; }

}  // namespace

ArrangementFile parse_arrangement(std::string_view text) {
  Json j = parse_text(text);
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
    fail(ErrorCode::parse_error, "arrangement file needs a \"lines\" array");
  ArrangementFile f;
  f.name = j.value("name", std::string());
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail(ErrorCode::parse_error, "seed must be a non-negative integer");
    f.seed = j["seed"].get<std::uint64_t>();
  }
  for (const auto& l : j["lines"]) {
    if (l.is_array() && l.size() == 3) {
      f.arrangement.lines.push_back({gaussian_of(l[0]), gaussian_of(l[1]), gaussian_of(l[2])});
    } else if (l.is_object() && l.contains("a") && l.contains("b")) {
      f.arrangement.lines.push_back({gaussian_of(l["a"]), gaussian_of(l["b"]), gaussian_of(l.value("c", Json(0)))});
    } else {
      fail(ErrorCode::parse_error, "a line is [a,b,c] or {\"a\":..,\"b\":..,\"c\":..}, got " + l.dump());
    }
  }
  f.arrangement.validate();
  return f;
}

std::string arrangement_json(const ArrangementFile& f) {
  Json lines = Json::array();
  for (const auto& l : f.arrangement.lines)
    lines.push_back(Json{{"a", to_string(l.a)}, {"b", to_string(l.b)}, {"c", to_string(l.c)}});
  Json j{{"schema", kSchema}, {"name", f.name}, {"seed", f.seed}, {"lines", lines}};
  return j.dump(2);
}

TwistSpec parse_twist(std::string_view text, std::size_t m) {
  Json j = parse_text(text);
  if (!j.is_object()) fail(ErrorCode::parse_error, "twist file must be a JSON object");
  TwistSpec s;
  if (j.contains("field")) {
    const Json& f = j["field"];
    if (f.is_string() && f.get<std::string>() == "Q") {
      s.field.conductor = 1;
    } else if (f.is_number_integer()) {
      s.field.conductor = f.get<long>();
    } else if (f.is_object() && f.contains("conductor") && f["conductor"].is_number_integer()) {
      s.field.conductor = f["conductor"].get<long>();
    } else {
      fail(ErrorCode::parse_error, "field is \"Q\" or {\"conductor\": N}");
    }
    if (s.field.conductor < 1) fail(ErrorCode::parse_error, "conductor must be positive");
  }
  if (j.contains("epsilon")) {
    for (const auto& e : j["epsilon"]) {
      if (!e.is_number_integer()) fail(ErrorCode::parse_error, "epsilon entries must be integers");
      s.epsilon.push_back(e.get<long>());
    }
  } else {
    s.epsilon.assign(m, 1);
  }
  if (j.contains("rho")) {
    for (const auto& r : j["rho"]) {
      if (!r.is_array()) {
        s.rho.push_back(ScalarMatrix::scalar(1, scalar_of(r, s.field.conductor)));
        continue;
      }
      std::vector<std::vector<Scalar>> rows;
      for (const auto& row : r) {
        if (!row.is_array() || row.size() != r.size()) fail(ErrorCode::parse_error, "rho matrices must be square");
        rows.emplace_back();
        for (const auto& x : row) rows.back().push_back(scalar_of(x, s.field.conductor));
      }
      s.rho.push_back(ScalarMatrix::from_rows(rows));
    }
  } else {
    s.rho.assign(s.epsilon.size(), ScalarMatrix::identity(1));
  }
  if (s.epsilon.size() != m || s.rho.size() != m)
    fail(ErrorCode::shape_mismatch, "twist gives " + std::to_string(s.epsilon.size()) + " weights and " +
                                        std::to_string(s.rho.size()) + " matrices for " + std::to_string(m) +
                                        " generators");
  for (const auto& r : s.rho)
    if (r.dim() != s.rho.front().dim()) fail(ErrorCode::shape_mismatch, "rho matrices differ in size");
  return s;
}

std::string twist_json(const TwistSpec& s) {
  Json rho = Json::array();
  for (const auto& r : s.rho) {
    Json m = Json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < r.dim(); ++k) row.push_back(to_string(r(i, k)));
      m.push_back(row);
    }
    rho.push_back(m);
  }
  Json j{{"schema", kSchema}, {"field", {{"conductor", s.field.conductor}}}, {"epsilon", s.epsilon}, {"rho", rho}};
  return j.dump(2);
}

std::string digest(const Arrangement& arr) { return hex64(fnv1a(arrangement_json({"", arr, 0}))); }
std::string digest(const TwistSpec& spec) { return hex64(fnv1a(twist_json(spec))); }

std::string presentation_text(const Presentation& p) {
  std::string out = "<";
  for (std::size_t g = 0; g < p.generator_count; ++g) {
    if (g) out += ", ";
    out += pretty(FreeWord::generator(g), p.generator_count);
  }
  out += " |";
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    out += r ? ", [" : " [";
    out += pretty(p.relations[r].beta, p.generator_count) + ", " + pretty(p.relations[r].b, p.generator_count) + "]";
  }
  return out + ">";
}

std::string presentation_json(const Presentation& p, const WordPropagation& words, const GenericFrame& frame,
                              const std::string& name) {
  const std::size_t m = p.generator_count;
  Json rels = Json::array();
  for (const auto& r : p.relations)
    rels.push_back(Json{{"point", r.point + 1}, {"beta", pretty(r.beta, m)}, {"b", pretty(r.b, m)},
                        {"relator", to_string(r.relator())}});
  Json points = Json::array();
  for (std::size_t k = 0; k < p.points.size(); ++k) {
    Json local = Json::array();
    for (const auto& w : p.local_words[k]) local.push_back(pretty(w, m));
    points.push_back(Json{{"index", k + 1}, {"z1", to_string(p.points[k].coords.z1)},
                          {"z2", to_string(p.points[k].coords.z2)}, {"lines", one_based(p.points[k].incident)},
                          {"beta", pretty(p.beta[k], m)}, {"local_meridians", local}});
  }
  Json hist = Json::array();
  for (const auto& h : words.history) {
    Json l = Json::array();
    for (const auto& w : distinct_history(h)) l.push_back(pretty(w, m));
    hist.push_back(l);
  }
  Json j = envelope("presentation");
  j["name"] = name;
  j["frame"] = frame_value(frame);
  j["generators"] = m;
  j["text"] = presentation_text(p);
  j["relations"] = rels;
  j["points"] = points;
  j["strand_words"] = hist;
  return j.dump(2);
}

std::string graph_json(const MarkedTwoGraph& g, const GenericFrame& frame, const AssumptionReport& rep,
                       const std::string& name) {
  Json cr = Json::array();
  for (const auto& c : g.crossings) {
    Json x{{"time", to_string(c.time)}, {"x1", to_string(c.x1)}, {"strands", one_based(c.strands)},
           {"position", c.position + 1}};
    if (c.kind == CrossingKind::actual) {
      x["kind"] = "actual";
      x["point"] = c.point + 1;
    } else {
      x["kind"] = "virtual";
      x["sign"] = c.sign;
    }
    cr.push_back(x);
  }
  Json j = envelope("graph");
  j["name"] = name;
  j["frame"] = frame_value(frame);
  j["assumptions"] = assumptions_value(rep);
  j["initial_order"] = one_based(g.initial_order);
  j["final_order"] = one_based(g.final_order);
  j["actual"] = g.actual_count();
  j["virtual"] = g.virtual_count();
  j["crossings"] = cr;
  return j.dump(2);
}

std::string invariants_json(const InvariantsOutput& o) {
  Json j = envelope("invariants");
  j["name"] = o.name;
  j["dim"] = o.dim;
  j["delta0"] = to_string(o.delta0);
  j["delta1"] = to_string(o.delta1);
  j["delta0_detail"] = poly_value(o.delta0);
  j["delta1_detail"] = poly_value(o.delta1);
  if (o.delta0_minors) j["delta0_minors"] = to_string(*o.delta0_minors);
  j["h1_free_rank"] = o.h1_free_rank;
  j["h2_free_rank"] = o.h2_free_rank;
  j["euler_chi"] = o.chi;
  if (o.jump_loci) {
    j["jump_loci"] = Json{{"threshold", o.jump_loci->threshold},
                          {"level1", locus_value(o.jump_loci->level1)},
                          {"deep", locus_value(o.jump_loci->deep)}};
  }
  return j.dump(2);
}

std::string closed_form_json(const ClosedFormReport& r, const std::string& name, const std::string& which) {
  Json j = envelope(which.c_str());
  j["name"] = name;
  j["arrangement_hash"] = r.arrangement_hash;
  j["spec_hash"] = r.spec_hash;
  auto put = [&](const char* key, const CanonicalPoly& p, const FactoredPoly& f) {
    j[key] = Json{{"polynomial", poly_value(p)}, {"factored", to_string(f.merged())}, {"factors", factored_value(f)}};
  };
  if (which == "wstar" || which == "all") put("delta1_wstar", r.delta1_wstar, r.delta1_wstar_factored);
  if (which == "bounds" || which == "all") {
    put("divisor_bound", r.divisor_bound, r.divisor_bound_factored);
    if (r.refined_bound) put("refined_bound", *r.refined_bound, *r.refined_bound_factored);
    else j["refined_bound"] = nullptr;
    put("infinity_bound", r.infinity_bound, r.infinity_bound_factored);
  }
  if (which == "boundary" || which == "all") {
    if (r.boundary_ratio) put("boundary_ratio", *r.boundary_ratio, *r.boundary_ratio_factored);
    else j["boundary_ratio"] = nullptr;
  }
  return j.dump(2);
}

std::string falk_json(const FalkCertificate& c) {
  Json j = envelope("falk");
  j["epsilon"] = c.epsilon;
  j["conductor"] = c.modulus;
  j["rho_exponents"] = c.c;
  j["candidates_tried"] = c.candidates_tried;
  j["pairwise_disjoint"] = c.disjoint;
  j["a1"] = Json{{"boundary_ratio", to_string(c.a1_ratio.merged())}, {"factors", factored_value(c.a1_ratio)},
                 {"roots", roots_value(c.a1_roots)}, {"parity", profile_value(c.a1_profile)}};
  j["a2"] = Json{{"boundary_ratio", to_string(c.a2_ratio.merged())}, {"factors", factored_value(c.a2_ratio)},
                 {"roots", roots_value(c.a2_roots)}, {"parity", profile_value(c.a2_profile)}};
  j["verdict"] = c.distinguished ? "distinguished" : "not distinguished";
  return j.dump(2);
}

bool CaseResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string verify_json(const std::vector<CaseResult>& cases) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : cases) {
    Json checks = Json::array();
    for (const auto& x : c.checks) {
      Json y{{"name", x.name}, {"passed", x.passed}};
      if (!x.detail.empty()) y["detail"] = x.detail;
      checks.push_back(y);
    }
    all = all && c.passed();
    arr.push_back(Json{{"case", c.name}, {"passed", c.passed()}, {"checks", checks}});
  }
  Json j = envelope("verify");
  j["passed"] = all;
  j["cases"] = arr;
  return j.dump(2);
}

std::string error_json(const std::string& code, const std::string& message) {
  Json j{{"schema", kSchema}, {"error", {{"code", code}, {"message", message}}}};
  return j.dump(2);
}

std::string polynomial_json_value(const CanonicalPoly& p) { return poly_value(p).dump(); }

}  // namespace arrangealex
