#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrangealex/gaussian.hpp"

namespace arrangealex {

// {a*z1 + b*z2 + c = 0}
struct AffineLine {
  GaussianRational a, b, c;
};

bool same_line(const AffineLine& l, const AffineLine& k);
bool parallel(const AffineLine& l, const AffineLine& k);

struct Point2 {
  GaussianRational z1, z2;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Lines are indexed from 0 internally; text output numbers them from 1.
struct Arrangement {
  std::vector<AffineLine> lines;
  std::size_t size() const { return lines.size(); }
  // Throws precondition on a degenerate line or a repeated line.
  void validate() const;
};

struct SingularPoint {
  Point2 coords;
  std::vector<std::size_t> incident;  // sorted
  std::size_t multiplicity() const { return incident.size(); }
};

// Sorted by (Re z1, Im z1, Re z2, Im z2).
std::vector<SingularPoint> singular_points(const Arrangement& arr);
bool is_essential(const Arrangement& arr);

struct IncidenceSummary {
  std::size_t s = 0;
  std::vector<std::size_t> d;    // per singular point
  std::vector<std::size_t> s_i;  // per line
  long euler_chi = 0;
};

IncidenceSummary incidence_summary(const Arrangement& arr);

struct ProjectiveCompletion {
  std::vector<std::vector<std::size_t>> direction_classes;
  // class size + 1, the line at infinity included
  std::vector<std::size_t> infinity_multiplicity;
  // s_tilde[0] is l0, s_tilde[i + 1] belongs to line i
  std::vector<std::size_t> s_tilde;
};

ProjectiveCompletion projectivize(const Arrangement& arr);

// Lines without a parallel partner.
std::vector<std::size_t> parallel_free_lines(const Arrangement& arr);

std::string to_string(const Point2& p);
std::string to_string(const AffineLine& l);

}  // namespace arrangealex
