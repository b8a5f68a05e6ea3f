#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arrangealex/arrangement.hpp"
#include "arrangealex/closed_forms.hpp"
#include "arrangealex/marked_graph.hpp"
#include "arrangealex/presentation.hpp"
#include "arrangealex/roots.hpp"
#include "arrangealex/twist.hpp"

// JSON in and out. Everything is exchanged as text so the JSON library
// stays an implementation detail of the core.
namespace arrangealex {

inline constexpr const char* kSchema = "arrangealex/1";

struct ArrangementFile {
  std::string name;
  Arrangement arrangement;
  std::uint64_t seed = 0;  // frame seed
};

// {"lines":[{"a":..,"b":..,"c":..}, ...] or [[a,b,c], ...], "name", "seed"}
// Coefficients are numbers or strings like "1/2 - 3i".
ArrangementFile parse_arrangement(std::string_view json);
std::string arrangement_json(const ArrangementFile& f);

// {"field":{"conductor":N} | "Q", "epsilon":[...], "rho":[...]}
// rho entries are scalars (d = 1) or square matrices of scalars. A scalar is
// a number, a string for parse_scalar, {"zeta":k}, or {"conductor":N,"coeffs":[...]}.
// A missing rho means the trivial 1-dimensional representation.
TwistSpec parse_twist(std::string_view json, std::size_t generator_count);
std::string twist_json(const TwistSpec& spec);

std::string digest(const Arrangement& arr);
std::string digest(const TwistSpec& spec);

// <a, b, c | [bcd, b], ...> with compact letters when m <= 26
std::string presentation_text(const Presentation& p);
std::string presentation_json(const Presentation& p, const WordPropagation& words, const GenericFrame& frame,
                              const std::string& name);
std::string graph_json(const MarkedTwoGraph& g, const GenericFrame& frame, const AssumptionReport& rep,
                       const std::string& name);

struct InvariantsOutput {
  std::string name;
  CanonicalPoly delta0, delta1;
  std::optional<CanonicalPoly> delta0_minors;
  std::size_t h1_free_rank = 0, h2_free_rank = 0;
  long chi = 0;
  std::size_t dim = 1;
  std::optional<JumpLociReport> jump_loci;
};
std::string invariants_json(const InvariantsOutput& o);

std::string closed_form_json(const ClosedFormReport& r, const std::string& name, const std::string& which);
std::string falk_json(const FalkCertificate& c);

struct CheckLine {
  std::string name;
  bool passed = true;
  std::string detail;
};
struct CaseResult {
  std::string name;
  std::vector<CheckLine> checks;
  bool passed() const;
};
std::string verify_json(const std::vector<CaseResult>& cases);

// {"schema":..., "error":{"code":..., "message":...}}
std::string error_json(const std::string& code, const std::string& message);

std::string polynomial_json_value(const CanonicalPoly& p);

}  // namespace arrangealex
