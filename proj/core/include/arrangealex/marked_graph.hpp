#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangealex/arrangement.hpp"

namespace arrangealex {

struct PathPoint {
  Rational x, y;  // z1 = x + i*y
};

struct GenericFrame {
  GaussianRational shear;         // (z1, z2) -> (z1 + shear*z2, z2)
  PathPoint base;                 // basepoint projection
  std::vector<PathPoint> path;    // breakpoints, base first, x strictly increasing
  Rational half_width;            // plateau half-width
  Rational bound;                 // every tracked Im z2 stays below this
  std::uint64_t seed = 0;
  int attempts = 0;               // shear candidates tried
};

Arrangement apply_shear(const Arrangement& arr, const GaussianRational& lambda);

enum class CrossingKind { actual, virtual_crossing };

struct Crossing {
  Rational time;  // x1 - x1(base)
  Rational x1;
  CrossingKind kind = CrossingKind::virtual_crossing;
  int sign = 0;               // +1 / -1 on virtual crossings
  std::size_t point = 0;      // singular point index (sweep order) on actual ones
  std::vector<std::size_t> strands;  // line indices bottom-up just before
  std::size_t position = 0;   // bottom-up slot of strands[0]
};

struct MarkedTwoGraph {
  std::size_t line_count = 0;
  std::vector<std::size_t> initial_order;  // bottom-up by Re z2 at the base fiber
  std::vector<std::size_t> final_order;
  std::vector<Crossing> crossings;
  std::vector<SingularPoint> points;  // original coordinates, in sweep order
  std::size_t actual_count() const;
  std::size_t virtual_count() const;
};

struct AssumptionResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct AssumptionReport {
  std::vector<AssumptionResult> results;
  bool all_passed() const;
  std::string summary() const;
};

struct FramedArrangement {
  Arrangement sheared;
  GenericFrame frame;
};

// Tries shear 0 first, then candidates drawn from the seed.
FramedArrangement choose_generic_frame(const Arrangement& arr, std::uint64_t seed);

// Builds the standard path for a given shear without checking anything
// beyond the singular abscissae being usable.
GenericFrame frame_for_shear(const Arrangement& arr, const GaussianRational& lambda);

AssumptionReport verify_assumptions(const Arrangement& arr, const GenericFrame& frame);
MarkedTwoGraph trace_graph(const Arrangement& arr, const GenericFrame& frame);

// Re/Im of z2 for each strand at a path parameter x (original line order).
struct StrandValue {
  Rational re, im;
};
std::vector<StrandValue> strand_values(const Arrangement& arr, const GenericFrame& frame, const Rational& x);

// Bottom-up order of strands at path parameter x by Re z2 (ties by Im).
std::vector<std::size_t> order_at(const Arrangement& arr, const GenericFrame& frame, const Rational& x);

}  // namespace arrangealex
