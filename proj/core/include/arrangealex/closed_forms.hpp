#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrangealex/arrangement.hpp"
#include "arrangealex/fox.hpp"
#include "arrangealex/presentation.hpp"
#include "arrangealex/twist.hpp"

namespace arrangealex {

// base^exponent. Loop factors carry the abelianized loop (exponents of
// a_1..a_m) and have base = canonical det(t^eps rho - id) of that loop.
struct Factor {
  std::string label;
  CanonicalPoly base;
  long exponent = 1;
  std::optional<std::vector<long>> loop;
};

struct FactoredPoly {
  std::vector<Factor> factors;
  CanonicalPoly product() const;
  // equal bases merged by adding exponents, first occurrence keeps its label
  FactoredPoly merged() const;
};

std::string to_string(const FactoredPoly& f);

struct TorsionRatioVerdict {
  bool ok = false;
  CanonicalPoly closed_ratio;    // point and line products
  CanonicalPoly pieces_delta1;   // product of Delta1 over the local pieces
  CanonicalPoly pieces_delta0;   // product of Delta0 over the local pieces
  bool wstar_consistent = false; // delta1_wstar == closed_ratio * Delta0
};

// Everything needed by the closed formulas for one (arrangement, twist).
class ClosedForms {
 public:
  ClosedForms(Arrangement arr, Presentation pres, TwistSpec spec);
  ClosedForms(const Arrangement& arr, const TwistSpec& spec, std::uint64_t seed = 0);

  const Arrangement& arrangement() const { return arr_; }
  const Presentation& presentation() const { return pres_; }
  const TwistSpec& spec() const { return spec_; }
  const IncidenceSummary& incidence() const { return inc_; }
  const CanonicalPoly& delta0() const { return delta0_; }

  FactoredPoly delta1_wstar() const;
  FactoredPoly divisor_bound() const;
  std::optional<FactoredPoly> refined_bound() const;   // absent when every line has a parallel
  std::optional<FactoredPoly> boundary_ratio() const;  // absent unless dim = 1
  FactoredPoly infinity_root_bound() const;
  TorsionRatioVerdict torsion_ratio_check() const;

  // det(t^eps(beta_k) rho(beta_k) - id) and det(t^eps(a_i) rho(a_i) - id)
  Factor point_factor(std::size_t k, long exponent) const;
  Factor line_factor(std::size_t i, long exponent) const;

 private:
  Factor word_factor(std::string label, const FreeWord& w, long exponent) const;
  Factor abelian_factor(std::string label, const std::vector<long>& loop, long exponent) const;
  std::vector<Factor> point_and_line_factors() const;
  CanonicalPoly gcd_of_line_factors() const;

  Arrangement arr_;
  Presentation pres_;
  TwistSpec spec_;
  IncidenceSummary inc_;
  CanonicalPoly delta0_;
};

struct ClosedFormReport {
  CanonicalPoly delta1_wstar;
  CanonicalPoly divisor_bound;
  std::optional<CanonicalPoly> refined_bound;
  std::optional<CanonicalPoly> boundary_ratio;
  CanonicalPoly infinity_bound;
  FactoredPoly delta1_wstar_factored;
  FactoredPoly divisor_bound_factored;
  std::optional<FactoredPoly> refined_bound_factored;
  std::optional<FactoredPoly> boundary_ratio_factored;
  FactoredPoly infinity_bound_factored;
  std::string arrangement_hash;
  std::string spec_hash;
};

ClosedFormReport closed_form_report(const ClosedForms& cf);

}  // namespace arrangealex
