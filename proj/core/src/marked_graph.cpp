#include "arrangealex/marked_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "arrangealex/error.hpp"

namespace arrangealex {

Arrangement apply_shear(const Arrangement& arr, const GaussianRational& lambda) {
  Arrangement out = arr;
  for (auto& l : out.lines) l.b = l.b - l.a * lambda;
  return out;
}

std::size_t MarkedTwoGraph::actual_count() const {
  return std::count_if(crossings.begin(), crossings.end(),
                       [](const Crossing& c) { return c.kind == CrossingKind::actual; });
}

std::size_t MarkedTwoGraph::virtual_count() const { return crossings.size() - actual_count(); }

bool AssumptionReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const AssumptionResult& r) { return r.passed; });
}

std::string AssumptionReport::summary() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.name << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.witness.empty()) os << " (" << r.witness << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

const char* kNoVertical = "no_vertical_lines";
const char* kDistinctAbscissae = "distinct_singular_abscissae";
const char* kPlateaus = "path_plateaus";
const char* kTransverse = "transverse_virtual_crossings";
const char* kSeparated = "separated_crossings";
const char* kOffBreakpoints = "crossings_off_breakpoints";

// z2 = A + B*x along one path segment
struct AffineZ {
  GaussianRational A, B;
  Rational re(const Rational& x) const { return A.re + B.re * x; }
  Rational im(const Rational& x) const { return A.im + B.im * x; }
};

struct PointInfo {
  SingularPoint original;
  GaussianRational w1;  // sheared first coordinate
};

// Singular points with their sheared first coordinate, sorted by Re w1.
std::vector<PointInfo> sweep_points(const Arrangement& arr, const GaussianRational& lambda) {
  std::vector<PointInfo> out;
  for (auto& p : singular_points(arr)) out.push_back({p, p.coords.z1 + lambda * p.coords.z2});
  std::stable_sort(out.begin(), out.end(), [](const PointInfo& a, const PointInfo& b) {
    if (a.w1.re != b.w1.re) return a.w1.re < b.w1.re;
    return a.w1.im < b.w1.im;
  });
  return out;
}

bool has_vertical(const Arrangement& sheared, std::string& witness) {
  for (std::size_t i = 0; i < sheared.size(); ++i)
    if (sheared.lines[i].b.is_zero()) {
      witness = "line " + std::to_string(i + 1);
      return true;
    }
  return false;
}

bool repeated_abscissa(const std::vector<PointInfo>& pts, std::string& witness) {
  for (std::size_t k = 1; k < pts.size(); ++k)
    if (pts[k].w1.re == pts[k - 1].w1.re) {
      witness = "x1 = " + to_string(pts[k].w1.re);
      return true;
    }
  return false;
}

std::vector<AffineZ> segment_strands(const Arrangement& sheared, const PathPoint& p0, const PathPoint& p1) {
  Rational s = (p1.y - p0.y) / (p1.x - p0.x);
  Rational c0 = p0.y - s * p0.x;
  std::vector<AffineZ> out;
  for (const auto& l : sheared.lines) {
    GaussianRational binv = l.b.inverse();
    GaussianRational beta = -l.a * binv, alpha = -l.c * binv;
    GaussianRational ic0{Rational(0), c0};
    out.push_back({alpha + beta * ic0, beta * GaussianRational{Rational(1), s}});
  }
  return out;
}

struct PairEvent {
  std::size_t i, j;
  bool actual;
  int sign;  // virtual only
};

struct Analysis {
  AssumptionReport report;
  Arrangement sheared;
  std::vector<PointInfo> points;
  std::map<Rational, std::vector<PairEvent>> events;
  std::map<Rational, std::size_t> actual_at;  // x -> sweep point index
};

void record(AssumptionReport& rep, const char* name, const std::string& witness) {
  for (auto& r : rep.results)
    if (r.name == name && r.passed) {
      r.passed = false;
      r.witness = witness;
    }
}

Analysis analyse(const Arrangement& arr, const GenericFrame& frame) {
  Analysis an;
  for (const char* n : {kNoVertical, kDistinctAbscissae, kPlateaus, kTransverse, kSeparated, kOffBreakpoints})
    an.report.results.push_back({n, true, ""});
  an.sheared = apply_shear(arr, frame.shear);
  std::string w;
  if (has_vertical(an.sheared, w)) {
    record(an.report, kNoVertical, w);
    return an;
  }
  an.points = sweep_points(arr, frame.shear);
  if (repeated_abscissa(an.points, w)) {
    record(an.report, kDistinctAbscissae, w);
    return an;
  }
  const auto& path = frame.path;
  if (path.size() < 2) {
    record(an.report, kPlateaus, "empty path");
    return an;
  }
  for (std::size_t k = 1; k < path.size(); ++k)
    if (!(path[k - 1].x < path[k].x)) {
      record(an.report, kPlateaus, "path not increasing in x1");
      return an;
    }
  for (const auto& p : an.points) {
    bool on = false;
    for (std::size_t k = 1; k < path.size() && !on; ++k)
      on = path[k - 1].y == p.w1.im && path[k].y == p.w1.im && path[k - 1].x < p.w1.re && p.w1.re < path[k].x;
    if (!on) record(an.report, kPlateaus, "point " + to_string(p.original.coords) + " not on a plateau interior");
  }

  std::size_t m = arr.size();
  // breakpoints: strands must be separated in Re z2
  for (std::size_t k = 0; k < path.size(); ++k) {
    const PathPoint& p0 = k + 1 < path.size() ? path[k] : path[k - 1];
    const PathPoint& p1 = k + 1 < path.size() ? path[k + 1] : path[k];
    auto z = segment_strands(an.sheared, p0, p1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (z[i].re(path[k].x) == z[j].re(path[k].x))
          record(an.report, kOffBreakpoints,
                 "strands " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " at x1 = " + to_string(path[k].x));
  }

  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto z = segment_strands(an.sheared, path[k], path[k + 1]);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        Rational dB = z[i].B.re - z[j].B.re, dA = z[i].A.re - z[j].A.re;
        if (sgn(dB) == 0) {
          if (sgn(dA) == 0)
            record(an.report, kTransverse,
                   "strands " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " overlap on segment " +
                       std::to_string(k + 1));
          continue;
        }
        Rational x = -dA / dB;
        if (!(path[k].x < x && x < path[k + 1].x)) continue;
        bool actual = z[i].im(x) == z[j].im(x);
        int sign = 0;
        if (!actual) {
          // dB > 0: strand i climbs through j, so j is the upper strand before
          std::size_t upper = sgn(dB) > 0 ? j : i, lower = upper == i ? j : i;
          sign = z[upper].im(x) > z[lower].im(x) ? 1 : -1;
        }
        an.events[x].push_back({i, j, actual, sign});
      }
    }
  }

  // classify events by abscissa
  std::vector<bool> visited(an.points.size(), false);
  for (const auto& [x, evs] : an.events) {
    bool any_actual = std::any_of(evs.begin(), evs.end(), [](const PairEvent& e) { return e.actual; });
    if (!any_actual) {
      if (evs.size() > 1) record(an.report, kSeparated, "several virtual crossings at x1 = " + to_string(x));
      continue;
    }
    std::optional<std::size_t> idx;
    for (std::size_t k = 0; k < an.points.size(); ++k)
      if (an.points[k].w1.re == x) idx = k;
    if (!idx) {
      record(an.report, kSeparated, "actual crossing away from singular points at x1 = " + to_string(x));
      continue;
    }
    const auto& inc = an.points[*idx].original.incident;
    std::size_t want = inc.size() * (inc.size() - 1) / 2;
    bool ok = evs.size() == want;
    for (const auto& e : evs) {
      bool in_i = std::binary_search(inc.begin(), inc.end(), e.i);
      bool in_j = std::binary_search(inc.begin(), inc.end(), e.j);
      if (!e.actual || !in_i || !in_j) ok = false;
    }
    if (!ok) {
      record(an.report, kSeparated, "crossing coincides with singular point at x1 = " + to_string(x));
      continue;
    }
    visited[*idx] = true;
    an.actual_at[x] = *idx;
  }
  for (std::size_t k = 0; k < an.points.size(); ++k)
    if (!visited[k]) record(an.report, kPlateaus, "singular point " + std::to_string(k + 1) + " never crossed");
  return an;
}

std::vector<std::size_t> order_from(const std::vector<StrandValue>& v) {
  std::vector<std::size_t> ord(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) ord[i] = i;
  std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
    if (v[a].re != v[b].re) return v[a].re < v[b].re;
    return v[a].im < v[b].im;
  });
  return ord;
}

}  // namespace

GenericFrame frame_for_shear(const Arrangement& arr, const GaussianRational& lambda) {
  GenericFrame f;
  f.shear = lambda;
  Arrangement sheared = apply_shear(arr, lambda);
  std::string w;
  auto pts = sweep_points(arr, lambda);
  if (pts.empty() || has_vertical(sheared, w) || repeated_abscissa(pts, w)) return f;
  Rational gap = 1;
  for (std::size_t k = 1; k < pts.size(); ++k) gap = std::min(gap, Rational(pts[k].w1.re - pts[k - 1].w1.re));
  f.half_width = gap / 3;
  const Rational& hw = f.half_width;
  f.base = {pts.front().w1.re - 1, pts.front().w1.im};
  f.path.push_back(f.base);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k > 0) f.path.push_back({pts[k].w1.re - hw, pts[k].w1.im});
    if (k + 1 < pts.size()) f.path.push_back({pts[k].w1.re + hw, pts[k].w1.im});
  }
  f.path.push_back({pts.back().w1.re + 1, pts.back().w1.im});
  // upper bound on Im z2: affine in x on each segment, so breakpoints suffice
  bool first = true;
  for (std::size_t k = 0; k < f.path.size(); ++k) {
    const PathPoint& p0 = k + 1 < f.path.size() ? f.path[k] : f.path[k - 1];
    const PathPoint& p1 = k + 1 < f.path.size() ? f.path[k + 1] : f.path[k];
    for (const auto& z : segment_strands(sheared, p0, p1)) {
      Rational im = z.im(f.path[k].x);
      if (first || im + 1 > f.bound) f.bound = im + 1;
      first = false;
    }
  }
  return f;
}

AssumptionReport verify_assumptions(const Arrangement& arr, const GenericFrame& frame) {
  return analyse(arr, frame).report;
}

static GaussianRational shear_candidate(std::mt19937_64& rng, int attempt) {
  auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  Rational re = make_rational(draw(-20, 20), draw(1, 9));
  if (attempt < 500) return GaussianRational(re);
  return {re, make_rational(draw(-20, 20), draw(1, 9))};
}

FramedArrangement choose_generic_frame(const Arrangement& arr, std::uint64_t seed) {
  arr.validate();
  if (!is_essential(arr)) fail(ErrorCode::precondition, "arrangement is not essential");
  std::mt19937_64 rng(seed);
  GaussianRational lambda;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    if (attempt > 0) {
      lambda = shear_candidate(rng, attempt);
      if (lambda.is_zero()) continue;
    }
    GenericFrame f = frame_for_shear(arr, lambda);
    if (f.path.empty()) continue;
    if (!verify_assumptions(arr, f).all_passed()) continue;
    f.seed = seed;
    f.attempts = attempt + 1;
    return {apply_shear(arr, lambda), f};
  }
  fail(ErrorCode::internal, "no generic frame found within 1000 shear candidates");
}

std::vector<StrandValue> strand_values(const Arrangement& arr, const GenericFrame& frame, const Rational& x) {
  const auto& path = frame.path;
  if (path.size() < 2) fail(ErrorCode::precondition, "frame has no path");
  std::size_t k = 0;
  while (k + 2 < path.size() && x > path[k + 1].x) ++k;
  Arrangement sheared = apply_shear(arr, frame.shear);
  std::vector<StrandValue> out;
  for (const auto& z : segment_strands(sheared, path[k], path[k + 1])) out.push_back({z.re(x), z.im(x)});
  return out;
}

std::vector<std::size_t> order_at(const Arrangement& arr, const GenericFrame& frame, const Rational& x) {
  return order_from(strand_values(arr, frame, x));
}

MarkedTwoGraph trace_graph(const Arrangement& arr, const GenericFrame& frame) {
  Analysis an = analyse(arr, frame);
  if (!an.report.all_passed())
    fail(ErrorCode::precondition, "frame violates genericity:\n" + an.report.summary());
  MarkedTwoGraph g;
  g.line_count = arr.size();
  for (const auto& p : an.points) g.points.push_back(p.original);
  std::vector<std::size_t> ord = order_at(arr, frame, frame.base.x);
  g.initial_order = ord;
  auto slot = [&](std::size_t line) {
    return static_cast<std::size_t>(std::find(ord.begin(), ord.end(), line) - ord.begin());
  };
  for (const auto& [x, evs] : an.events) {
    Crossing c;
    c.x1 = x;
    c.time = x - frame.base.x;
    auto act = an.actual_at.find(x);
    if (act != an.actual_at.end()) {
      c.kind = CrossingKind::actual;
      c.point = act->second;
      const auto& inc = an.points[c.point].original.incident;
      std::size_t lo = ord.size();
      for (std::size_t l : inc) lo = std::min(lo, slot(l));
      for (std::size_t q = lo; q < lo + inc.size(); ++q)
        if (q >= ord.size() || !std::binary_search(inc.begin(), inc.end(), ord[q]))
          fail(ErrorCode::internal, "actual crossing strands not contiguous");
      c.position = lo;
      c.strands.assign(ord.begin() + lo, ord.begin() + lo + inc.size());
      std::reverse(ord.begin() + lo, ord.begin() + lo + inc.size());
    } else {
      const PairEvent& e = evs.front();
      std::size_t si = slot(e.i), sj = slot(e.j);
      std::size_t lo = std::min(si, sj);
      if (std::max(si, sj) != lo + 1) fail(ErrorCode::internal, "virtual crossing strands not adjacent");
      c.kind = CrossingKind::virtual_crossing;
      c.sign = e.sign;
      c.position = lo;
      c.strands = {ord[lo], ord[lo + 1]};
      std::swap(ord[lo], ord[lo + 1]);
    }
    g.crossings.push_back(std::move(c));
  }
  g.final_order = ord;
  return g;
}

}  // namespace arrangealex
