#include "arrangealex/arrangement.hpp"

#include <algorithm>

#include "arrangealex/error.hpp"

namespace arrangealex {

bool same_line(const AffineLine& l, const AffineLine& k) {
  // proportional triples: all 2x2 minors vanish
  return (l.a * k.b - l.b * k.a).is_zero() && (l.a * k.c - l.c * k.a).is_zero() &&
         (l.b * k.c - l.c * k.b).is_zero();
}

bool parallel(const AffineLine& l, const AffineLine& k) { return (l.a * k.b - l.b * k.a).is_zero(); }

void Arrangement::validate() const {
  if (lines.empty()) fail(ErrorCode::precondition, "arrangement has no lines");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].a.is_zero() && lines[i].b.is_zero())
      fail(ErrorCode::precondition, "line " + std::to_string(i + 1) + " has a = b = 0");
    for (std::size_t j = 0; j < i; ++j)
      if (same_line(lines[i], lines[j]))
        fail(ErrorCode::precondition,
             "lines " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
  }
}

static bool point_less(const Point2& p, const Point2& q) {
  if (p.z1 != q.z1) return lex_less(p.z1, q.z1);
  return lex_less(p.z2, q.z2);
}

std::vector<SingularPoint> singular_points(const Arrangement& arr) {
  std::vector<SingularPoint> pts;
  const auto& L = arr.lines;
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      GaussianRational det = L[i].a * L[j].b - L[j].a * L[i].b;
      if (det.is_zero()) continue;
      Point2 p{(L[j].c * L[i].b - L[i].c * L[j].b) / det, (L[j].a * L[i].c - L[i].a * L[j].c) / det};
      auto it = std::find_if(pts.begin(), pts.end(), [&](const SingularPoint& s) { return s.coords == p; });
      if (it == pts.end()) {
        pts.push_back({p, {i, j}});
      } else {
        for (std::size_t k : {i, j})
          if (std::find(it->incident.begin(), it->incident.end(), k) == it->incident.end())
            it->incident.push_back(k);
      }
    }
  }
  for (auto& s : pts) std::sort(s.incident.begin(), s.incident.end());
  std::sort(pts.begin(), pts.end(),
            [](const SingularPoint& x, const SingularPoint& y) { return point_less(x.coords, y.coords); });
  return pts;
}

bool is_essential(const Arrangement& arr) {
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j)
      if (!parallel(arr.lines[i], arr.lines[j])) return true;
  return false;
}

IncidenceSummary incidence_summary(const Arrangement& arr) {
  if (!is_essential(arr))
    fail(ErrorCode::precondition, "arrangement is not essential (all lines parallel, no singular point)");
  auto pts = singular_points(arr);
  IncidenceSummary s;
  s.s = pts.size();
  s.s_i.assign(arr.size(), 0);
  long chi = 1 - static_cast<long>(arr.size());
  for (const auto& p : pts) {
    s.d.push_back(p.multiplicity());
    chi += static_cast<long>(p.multiplicity()) - 1;
    for (std::size_t i : p.incident) ++s.s_i[i];
  }
  s.euler_chi = chi;
  return s;
}

ProjectiveCompletion projectivize(const Arrangement& arr) {
  ProjectiveCompletion pc;
  std::vector<bool> seen(arr.size(), false);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < arr.size(); ++j)
      if (!seen[j] && parallel(arr.lines[i], arr.lines[j])) {
        seen[j] = true;
        cls.push_back(j);
      }
    pc.infinity_multiplicity.push_back(cls.size() + 1);
    pc.direction_classes.push_back(std::move(cls));
  }
  pc.s_tilde.assign(arr.size() + 1, 0);
  pc.s_tilde[0] = pc.direction_classes.size();
  for (const auto& p : singular_points(arr))
    for (std::size_t i : p.incident) ++pc.s_tilde[i + 1];
  for (std::size_t i = 0; i < arr.size(); ++i) ++pc.s_tilde[i + 1];
  return pc;
}

std::vector<std::size_t> parallel_free_lines(const Arrangement& arr) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    bool lonely = true;
    for (std::size_t j = 0; j < arr.size() && lonely; ++j)
      if (j != i && parallel(arr.lines[i], arr.lines[j])) lonely = false;
    if (lonely) out.push_back(i);
  }
  return out;
}

std::string to_string(const Point2& p) { return "(" + to_string(p.z1) + ", " + to_string(p.z2) + ")"; }

std::string to_string(const AffineLine& l) {
  return "(" + to_string(l.a) + ")*z1 + (" + to_string(l.b) + ")*z2 + (" + to_string(l.c) + ") = 0";
}

}  // namespace arrangealex
