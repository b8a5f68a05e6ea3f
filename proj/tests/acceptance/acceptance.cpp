// One line per acceptance criterion. Exit status is nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrangealex/checks.hpp"
#include "arrangealex/closed_forms.hpp"
#include "arrangealex/corpus.hpp"
#include "arrangealex/error.hpp"
#include "arrangealex/fox.hpp"
#include "arrangealex/marked_graph.hpp"
#include "arrangealex/roots.hpp"
#include "oracles.hpp"

using namespace arrangealex;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> info;
};

std::string join(const std::vector<FreeWord>& ws, std::size_t m) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + pretty(ws[i], m);
  return s + "}";
}

FreeWord invert_generator(const FreeWord& w, std::size_t g) {
  std::vector<int> l = w.letters();
  for (int& x : l)
    if (FreeWord::letter_generator(x) == static_cast<int>(g)) x = -x;
  return FreeWord::from_letters(l);
}

// A point relation up to rewriting: a double point [u, v] and the cyclic
// form [w1, w2, w3] both carry just the set of their local words.
using PointKey = std::set<FreeWord>;

std::multiset<PointKey> point_keys(const std::vector<std::vector<FreeWord>>& local) {
  std::multiset<PointKey> out;
  for (const auto& ws : local) out.insert(PointKey(ws.begin(), ws.end()));
  return out;
}

Outcome presentation_regression() {
  const std::size_t m = 4;
  const Arrangement& arr = corpus_case("four-line-tree").arrangement;
  FramedArrangement fa = choose_generic_frame(arr, 0);
  MarkedTwoGraph g = trace_graph(arr, fa.frame);
  Presentation p = presentation_from_graph(g, WordPolicy::local_reduced);
  std::vector<FreeWord> seq = distinct_history(propagate_words(g, WordPolicy::local_reduced).history[2]);

  // meridian and conjugator, as printed
  struct Printed {
    const char* x;
    const char* u;
  };
  auto build = [&](const std::vector<Printed>& ps, bool fix_b) {
    std::vector<FreeWord> out;
    for (const auto& p : ps) {
      FreeWord u = parse_word(p.u, m);
      if (fix_b) u = invert_generator(u, 1);
      out.push_back(parse_word(p.x, m).conjugated_by(u));
    }
    return out;
  };
  std::vector<std::vector<Printed>> printed_points{{{"b", ""}, {"c", ""}, {"d", ""}}, {{"a", ""}, {"c", "bd^-1"}},
                                                   {{"a", ""}, {"d", ""}}};
  std::vector<Printed> printed_seq{{"c", ""}, {"c", "b"}, {"c", "bd^-1"}, {"c", "bd^-1a"}, {"c", "bd^-1ad"},
                                   {"c", "bd^-1ada^-1"}};
  auto points = [&](bool fix_b) {
    std::vector<std::vector<FreeWord>> out;
    for (const auto& ps : printed_points) out.push_back(build(ps, fix_b));
    return out;
  };

  auto compare = [&](const std::vector<std::vector<FreeWord>>& pts, const std::vector<FreeWord>& sq) {
    return std::make_pair(point_keys(pts) == point_keys(p.local_words), sq == seq);
  };
  auto [rel_ok, seq_ok] = compare(points(false), build(printed_seq, false));

  Outcome o;
  o.passed = rel_ok && seq_ok;
  std::string traced_pts;
  for (const auto& ws : p.local_words) traced_pts += join(ws, m);
  o.detail = std::string("relations ") + (rel_ok ? "match" : "differ") + ", H3 sequence " +
             (seq_ok ? "matches" : "differs") + "; traced points " + traced_pts + ", traced H3 " + join(seq, m);

  auto [rel_fix, seq_fix] = compare(points(true), build(printed_seq, true));
  o.info.push_back(std::string("printed conjugators with b -> b^-1: relations ") + (rel_fix ? "match" : "differ") +
                   ", H3 sequence " + (seq_fix ? "matches" : "differs"));
  Presentation printed;
  printed.generator_count = m;
  for (const auto& ws : points(false)) {
    FreeWord beta;
    for (const auto& w : ws) beta *= w;
    for (std::size_t j = 0; j + 1 < ws.size(); ++j) printed.relations.push_back({beta, ws[j], 0});
  }
  o.info.push_back("homomorphisms into S4: traced " + std::to_string(oracle::count_homs(p, 4)) + ", printed " +
                   std::to_string(oracle::count_homs(printed, 4)));
  return o;
}

Outcome falk_distinction() {
  FalkCertificate cert = falk_distinguish(corpus_case("falk-a1").arrangement, corpus_case("falk-a2").arrangement);
  bool has3 = false, has1 = false;
  for (const auto& [k, mult] : cert.a2_roots.counts) {
    has3 = has3 || mult == 3;
    has1 = has1 || mult == 1;
  }
  Outcome o;
  o.passed = cert.a1_profile.all_even && has3 && has1 && cert.disjoint && cert.distinguished;
  std::ostringstream d;
  d << "N = " << cert.modulus << ", c = (";
  for (std::size_t i = 0; i < cert.c.size(); ++i) d << (i ? "," : "") << cert.c[i];
  d << "); A1 all even: " << (cert.a1_profile.all_even ? "yes" : "no") << "; A2 multiplicity 3: "
    << (has3 ? "yes" : "no") << ", multiplicity 1: " << (has1 ? "yes" : "no")
    << "; factor root sets disjoint: " << (cert.disjoint ? "yes" : "no");
  o.detail = d.str();
  return o;
}

struct CorpusRun {
  std::string name;
  const CorpusCase* cc;
  Presentation pres;
  NamedTwist twist;
};

std::vector<CorpusRun> corpus_runs(std::vector<std::string>* missing_rank_two) {
  std::vector<CorpusRun> out;
  for (const auto& c : bundled_corpus()) {
    Presentation p = presentation(c.arrangement, c.seed);
    std::vector<NamedTwist> ts = standard_twists(c.arrangement, p);
    if (ts.size() < 3 && missing_rank_two) missing_rank_two->push_back(c.name);
    for (auto& t : ts) out.push_back({c.name, &c, p, std::move(t)});
  }
  return out;
}

std::string label(const CorpusRun& r) { return r.name + "/" + r.twist.name; }

Outcome fails_or(const std::vector<std::string>& bad, std::size_t total, const std::string& what) {
  Outcome o;
  o.passed = bad.empty();
  if (bad.empty()) {
    o.detail = std::to_string(total) + " " + what;
  } else {
    o.detail = "failed on";
    for (const auto& b : bad) o.detail += " " + b;
  }
  return o;
}

Outcome divisibility(const std::vector<CorpusRun>& runs, const std::vector<std::string>& missing) {
  std::vector<std::string> bad;
  for (const auto& r : runs) {
    ClosedForms cf(r.cc->arrangement, r.pres, r.twist.spec);
    CanonicalPoly d1 = delta1(r.pres, r.twist.spec).value;
    if (!divides(d1, cf.delta1_wstar().product()) || !divides(d1, cf.divisor_bound().product())) bad.push_back(label(r));
  }
  Outcome o = fails_or(bad, runs.size(), "arrangement/twist pairs");
  if (!missing.empty()) {
    std::string s = "no rank-two twist for:";
    for (const auto& n : missing) s += " " + n;
    o.info.push_back(s);
  }
  return o;
}

Outcome refinement(const std::vector<CorpusRun>& runs) {
  std::vector<std::string> bad;
  std::size_t n = 0;
  for (const auto& r : runs) {
    ClosedForms cf(r.cc->arrangement, r.pres, r.twist.spec);
    auto ref = cf.refined_bound();
    if (!ref) continue;
    ++n;
    CanonicalPoly rb = ref->product();
    CanonicalPoly d1 = delta1(r.pres, r.twist.spec).value;
    if (!divides(rb, cf.divisor_bound().product()) || !divides(d1, rb)) bad.push_back(label(r));
  }
  if (n == 0) return {false, "no case with parallel-free lines", {}};
  return fails_or(bad, n, "pairs with parallel-free lines");
}

Outcome root_containment_check(const std::vector<CorpusRun>& runs) {
  std::vector<std::string> bad;
  for (const auto& r : runs) {
    ClosedForms cf(r.cc->arrangement, r.pres, r.twist.spec);
    CanonicalPoly inf = radical(cf.infinity_root_bound().product());
    CanonicalPoly d0 = delta0(r.pres, r.twist.spec), d1 = delta1(r.pres, r.twist.spec).value;
    if (!divides(radical(d0), inf) || !divides(radical(d1), inf)) bad.push_back(label(r));
  }
  return fails_or(bad, runs.size(), "pairs");
}

Outcome torsion_and_rank(const std::vector<CorpusRun>& runs) {
  std::vector<std::string> bad;
  for (const auto& r : runs) {
    long chi = incidence_summary(r.cc->arrangement).euler_chi;
    Delta1Result d1 = delta1(r.pres, r.twist.spec);
    long h2 = static_cast<long>(h2_free_rank(r.pres, r.twist.spec));
    if (d1.h1_free_rank != 0 || h2 != static_cast<long>(r.twist.spec.dim()) * chi)
      bad.push_back(label(r) + "(h1 " + std::to_string(d1.h1_free_rank) + ", h2 " + std::to_string(h2) + ", d*chi " +
                    std::to_string(static_cast<long>(r.twist.spec.dim()) * chi) + ")");
  }
  return fails_or(bad, runs.size(), "pairs");
}

Outcome surface_oracle() {
  std::vector<std::string> bad;
  std::size_t n = 0;
  for (std::size_t s = 1; s <= 3; ++s) {
    Presentation p = surface_times_circle(s);
    for (long N : {1L, 3L, 5L, 6L}) {
      for (long ca = 0; ca < N; ++ca) {
        for (long ea : {1L, 2L}) {
          TwistSpec spec;
          spec.field.conductor = N;
          for (std::size_t j = 0; j < s; ++j) {
            spec.epsilon.push_back(static_cast<long>(j % 3) + 1);
            spec.rho.push_back(ScalarMatrix::scalar(1, Scalar::zeta(N, static_cast<long>(2 * j + 1))));
          }
          spec.epsilon.push_back(ea);
          spec.rho.push_back(ScalarMatrix::scalar(1, Scalar::zeta(N, ca)));
          ++n;
          CanonicalPoly d0 = delta0(p, spec), d1 = delta1(p, spec).value;
          CanonicalPoly loop = normalize(LaurentPoly(Scalar(1)) - LaurentPoly::monomial(Scalar::zeta(N, ca), ea));
          if (d1 != d0 * loop.pow(s - 1))
            bad.push_back("s=" + std::to_string(s) + ",N=" + std::to_string(N) + ",c=" + std::to_string(ca) +
                          ",e=" + std::to_string(ea));
        }
      }
    }
  }
  return fails_or(bad, n, "specs");
}

Outcome boundary_comparison() {
  FalkCertificate cert = falk_distinguish(corpus_case("falk-a1").arrangement, corpus_case("falk-a2").arrangement);
  std::vector<std::string> bad;
  std::size_t n = 0;
  for (const char* name : {"falk-a1", "falk-a2"}) {
    const auto& c = corpus_case(name);
    Presentation p = presentation(c.arrangement, c.seed);
    std::vector<NamedTwist> specs{{"trivial", trivial_twist(5)},
                                  {"character", generic_character_twist(5)},
                                  {"falk", character_twist(cert.modulus, cert.c, cert.epsilon)},
                                  {"zeta5", character_twist(5, {1, 2, 3, 4, 1}, {1, 1, 2, 2, 3})}};
    for (const auto& t : specs) {
      ++n;
      ClosedForms cf(c.arrangement, p, t.spec);
      auto br = cf.boundary_ratio();
      if (!br || !divides(cf.delta1_wstar().product(), br->product() * cf.delta0()))
        bad.push_back(std::string(name) + "/" + t.name);
    }
  }
  return fails_or(bad, n, "Falk-pair specs");
}

// polynomials of degree <= 2 over Q
std::vector<LaurentPoly> entries(int level) {
  std::vector<std::string> s =
      level == 0 ? std::vector<std::string>{"0", "1", "-1", "t", "t - 1", "t + 1", "t^2", "t^2 - 1", "t^2 + t + 1",
                                            "2*t - 1"}
      : level == 1 ? std::vector<std::string>{"0", "1", "t - 1", "t + 1", "t^2 - 1"}
                   : std::vector<std::string>{"0", "1", "t - 1", "t^2"};
  std::vector<LaurentPoly> out;
  for (const auto& x : s) out.push_back(parse_laurent(x));
  return out;
}

Outcome algebra_oracles() {
  std::size_t n = 0;
  std::vector<std::string> bad;
  struct Shape {
    std::size_t r, c;
    int level;
  };
  for (Shape sh : {Shape{1, 1, 0}, Shape{1, 2, 0}, Shape{2, 1, 0}, Shape{2, 2, 0}, Shape{1, 3, 0}, Shape{3, 1, 0},
                   Shape{2, 3, 1}, Shape{3, 2, 1}, Shape{3, 3, 2}}) {
    std::vector<LaurentPoly> e = entries(sh.level);
    std::size_t cells = sh.r * sh.c;
    std::vector<std::size_t> idx(cells, 0);
    while (true) {
      PolyMatrix m(sh.r, sh.c);
      for (std::size_t k = 0; k < cells; ++k) m(k / sh.c, k % sh.c) = e[idx[k]];
      ++n;
      HomologyOrder h = homology_torsion_order(m, PolyMatrix(sh.c, 1));
      std::size_t r = rank(m);
      CanonicalPoly want = r == 0 ? CanonicalPoly::one() : oracle::fitting_gcd(m, r);
      if (h.torsion != want || h.free_rank != sh.c - r) {
        if (bad.size() < 5) bad.push_back(to_string(m));
        else if (bad.size() == 5) bad.push_back("...");
      }
      std::size_t k = 0;
      while (k < cells && ++idx[k] == e.size()) idx[k++] = 0;
      if (k == cells) break;
    }
  }
  std::size_t cases = 0;
  for (const auto& c : bundled_corpus()) {
    Presentation p = presentation(c.arrangement, c.seed);
    for (const auto& t : standard_twists(c.arrangement, p)) {
      std::size_t d = t.spec.dim();
      if (p.generator_count * d > 10) continue;
      ++cases;
      TwistedChainComplex cx = build_complex(p, t.spec);
      if (delta0_of(cx, d).value != oracle::fitting_gcd(cx.d1, d)) bad.push_back(c.name + "/" + t.name);
    }
  }
  Outcome o = fails_or(bad, n, "matrices");
  if (o.passed) o.detail += ", " + std::to_string(cases) + " corpus Delta0 cases";
  return o;
}

}  // namespace

int main() {
  std::vector<std::string> missing;
  std::vector<CorpusRun> runs = corpus_runs(&missing);
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "presentation-regression", presentation_regression},
      {2, "falk-distinction", falk_distinction},
      {3, "divisibility", [&] { return divisibility(runs, missing); }},
      {4, "refinement", [&] { return refinement(runs); }},
      {5, "root-containment", [&] { return root_containment_check(runs); }},
      {6, "torsion-and-rank", [&] { return torsion_and_rank(runs); }},
      {7, "surface-times-circle", surface_oracle},
      {8, "boundary-comparison", boundary_comparison},
      {9, "algebra-oracles", algebra_oracles},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    for (const auto& i : o.info) std::printf("     info: %s\n", i.c_str());
    failed += !o.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
