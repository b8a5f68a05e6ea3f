// arrangealex: presentations, twisted Alexander polynomials and bounds for
// complex line arrangements.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arrangealex/checks.hpp"
#include "arrangealex/closed_forms.hpp"
#include "arrangealex/corpus.hpp"
#include "arrangealex/error.hpp"
#include "arrangealex/fox.hpp"
#include "arrangealex/io.hpp"
#include "arrangealex/marked_graph.hpp"
#include "arrangealex/presentation.hpp"
#include "arrangealex/roots.hpp"

namespace fs = std::filesystem;
using namespace arrangealex;

namespace {

constexpr int kPass = 0, kCheckFailed = 1, kInputError = 2;

struct Common {
  std::string arrangement;
  std::string twist;
  std::optional<std::uint64_t> seed;
  bool relaxed = false;
  bool pretty = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// a file path, or the name of a bundled arrangement
ArrangementFile load_arrangement(const Common& c) {
  ArrangementFile f;
  if (!fs::exists(c.arrangement)) {
    for (const auto& k : bundled_corpus())
      if (k.name == c.arrangement) f = {k.name, k.arrangement, k.seed};
    if (f.name.empty()) fail(ErrorCode::parse_error, "no such file or bundled arrangement: " + c.arrangement);
  } else {
    f = parse_arrangement(slurp(c.arrangement));
    if (f.name.empty()) f.name = fs::path(c.arrangement).stem().string();
  }
  if (c.seed) f.seed = *c.seed;
  return f;
}

TwistSpec load_twist(const Common& c, std::size_t m) {
  if (c.twist.empty() || c.twist == "trivial") return trivial_twist(m);
  if (c.twist == "character") return generic_character_twist(m);
  return parse_twist(slurp(c.twist), m);
}

// validated twist and its presentation
std::pair<Presentation, TwistSpec> prepared(const Common& c, const ArrangementFile& f) {
  Presentation p = presentation(f.arrangement, f.seed);
  TwistSpec s = load_twist(c, f.arrangement.size());
  auto v = validate_representation(p, s, c.relaxed);
  if (!v.ok) fail(ErrorCode::invalid_representation, v.witness);
  return {std::move(p), std::move(s)};
}

void add_common(CLI::App* sub, Common& c, bool twist) {
  sub->add_option("arrangement", c.arrangement, "arrangement JSON file or bundled name")->required();
  if (twist) {
    sub->add_option("-t,--twist", c.twist, "twist JSON file, or 'trivial' / 'character'");
    sub->add_flag("--relaxed-epsilon", c.relaxed, "allow non-positive epsilon (loop weights must stay nonzero)");
  }
  sub->add_option("--seed", c.seed, "frame seed (overrides the file)");
  sub->add_flag("--pretty", c.pretty, "human readable output instead of JSON");
}

int cmd_present(const Common& c, bool reduce) {
  ArrangementFile f = load_arrangement(c);
  FramedArrangement fa = choose_generic_frame(f.arrangement, f.seed);
  MarkedTwoGraph g = trace_graph(f.arrangement, fa.frame);
  WordPolicy pol = reduce ? WordPolicy::local_reduced : WordPolicy::raw;
  Presentation p = presentation_from_graph(g, pol);
  WordPropagation w = propagate_words(g, pol);
  if (!c.pretty) {
    std::cout << presentation_json(p, w, fa.frame, f.name) << "\n";
    return kPass;
  }
  const std::size_t m = p.generator_count;
  std::cout << presentation_text(p) << "\n";
  for (std::size_t i = 0; i < m; ++i) {
    std::cout << pretty(FreeWord::generator(i), m) << ":";
    for (const auto& x : distinct_history(w.history[i])) std::cout << " " << pretty(x, m);
    std::cout << "\n";
  }
  return kPass;
}

int cmd_graph(const Common& c, bool dump) {
  ArrangementFile f = load_arrangement(c);
  FramedArrangement fa = choose_generic_frame(f.arrangement, f.seed);
  AssumptionReport rep = verify_assumptions(f.arrangement, fa.frame);
  MarkedTwoGraph g = trace_graph(f.arrangement, fa.frame);
  if (dump || !c.pretty) {
    std::cout << graph_json(g, fa.frame, rep, f.name) << "\n";
  } else {
    std::cout << "shear " << to_string(fa.frame.shear) << ", " << g.actual_count() << " actual, "
              << g.virtual_count() << " virtual crossings\n"
              << rep.summary() << "\n";
  }
  return rep.all_passed() ? kPass : kCheckFailed;
}

int cmd_invariants(const Common& c, bool loci) {
  ArrangementFile f = load_arrangement(c);
  auto [p, s] = prepared(c, f);
  TwistedChainComplex cx = build_complex(p, s);
  Delta0Result d0 = delta0_of(cx, s.dim());
  Delta1Result d1 = delta1_of(cx);
  InvariantsOutput o{f.name, d0.value, d1.value, d0.minors, d1.h1_free_rank, h2_free_rank_of(cx),
                     incidence_summary(f.arrangement).euler_chi, s.dim(), std::nullopt};
  if (loci) o.jump_loci = jump_loci_report(o.delta0, o.delta1, o.dim, o.chi, s.field.conductor);
  if (c.pretty) {
    std::cout << "delta0 = " << to_string(o.delta0) << "\ndelta1 = " << to_string(o.delta1) << "\nh1 free rank "
              << o.h1_free_rank << ", h2 free rank " << o.h2_free_rank << ", chi " << o.chi << "\n";
  } else {
    std::cout << invariants_json(o) << "\n";
  }
  return kPass;
}

int cmd_closed(const Common& c, const std::string& which, bool check_roots) {
  ArrangementFile f = load_arrangement(c);
  auto [p, s] = prepared(c, f);
  ClosedForms cf(f.arrangement, p, s);
  ClosedFormReport r = closed_form_report(cf);
  int status = kPass;
  if (which == "boundary" && !r.boundary_ratio) fail(ErrorCode::unsupported, "boundary ratio needs a 1-dimensional twist");
  std::string extra;
  if (check_roots) {
    Delta1Result d1 = delta1(p, s);
    bool ok0 = root_containment(cf.delta0(), r.infinity_bound), ok1 = root_containment(d1.value, r.infinity_bound);
    extra = std::string("roots of delta0 inside bound: ") + (ok0 ? "yes" : "no") +
            "\nroots of delta1 inside bound: " + (ok1 ? "yes" : "no") + "\n";
    if (!ok0 || !ok1) status = kCheckFailed;
  }
  if (c.pretty) {
    if (which == "wstar") std::cout << "delta1(W*) = " << to_string(r.delta1_wstar_factored.merged()) << "\n";
    if (which == "boundary") std::cout << "delta1(B)/delta0(B) = " << to_string(r.boundary_ratio_factored->merged()) << "\n";
    if (which == "bounds") {
      std::cout << "divisor bound = " << to_string(r.divisor_bound_factored.merged()) << "\n";
      if (r.refined_bound) std::cout << "refined bound = " << to_string(r.refined_bound_factored->merged()) << "\n";
      std::cout << "infinity bound = " << to_string(r.infinity_bound_factored.merged()) << "\n";
    }
    std::cout << extra;
  } else {
    std::cout << closed_form_json(r, f.name, which) << "\n";
    if (check_roots) std::cerr << extra;
  }
  return status;
}

int cmd_falk(const std::string& a1, const std::string& a2, long max_n, bool pretty) {
  Common c1{a1, "", std::nullopt, false, false}, c2{a2, "", std::nullopt, false, false};
  FalkSearchOptions opt;
  opt.max_conductor = max_n;
  FalkCertificate cert = falk_distinguish(load_arrangement(c1).arrangement, load_arrangement(c2).arrangement, opt);
  if (pretty) {
    std::cout << "conductor " << cert.modulus << ", verdict " << (cert.distinguished ? "distinguished" : "not distinguished")
              << "\nA1: " << to_string(cert.a1_ratio.merged()) << "\nA2: " << to_string(cert.a2_ratio.merged()) << "\n";
  } else {
    std::cout << falk_json(cert) << "\n";
  }
  return cert.distinguished ? kPass : kCheckFailed;
}

int cmd_verify(const std::vector<std::string>& files, const std::string& twist, bool relaxed, unsigned workers,
               bool skip_corpus, bool pretty) {
  std::vector<VerifyJob> jobs = skip_corpus ? std::vector<VerifyJob>{} : corpus_jobs();
  for (const auto& path : files) {
    Common c{path, twist, std::nullopt, relaxed, false};
    ArrangementFile f = load_arrangement(c);
    VerifyJob j{f.name, f.arrangement, f.seed, {}};
    if (!twist.empty()) j.twists.push_back({fs::path(twist).stem().string(), load_twist(c, f.arrangement.size())});
    jobs.push_back(std::move(j));
  }
  CheckOptions opt;
  opt.relaxed_epsilon = relaxed;
  auto results = verify(jobs, workers, opt);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (pretty) {
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
      for (const auto& x : r.checks)
        if (!x.passed) std::cout << "     " << x.name << ": " << x.detail << "\n";
    }
  } else {
    std::cout << verify_json(results) << "\n";
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_corpus(const std::string& dir) {
  for (const auto& k : bundled_corpus()) {
    std::string text = arrangement_json({k.name, k.arrangement, k.seed});
    if (dir.empty()) {
      std::cout << k.name << "\n";
      continue;
    }
    std::ofstream(fs::path(dir) / (k.name + ".json")) << text << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arrangealex: twisted Alexander polynomials of line arrangement complements"};
  app.require_subcommand(1);

  Common present_c, graph_c, inv_c, wstar_c, boundary_c, bounds_c;
  bool reduce = false, dump = false, loci = false, check_roots = false;

  auto* present = app.add_subcommand("present", "fundamental group presentation from the braid monodromy");
  add_common(present, present_c, false);
  present->add_flag("--reduce-local", reduce, "shorten words at actual crossings using the local relation");

  auto* graph = app.add_subcommand("graph", "marked 2-graph of the sweep");
  add_common(graph, graph_c, false);
  graph->add_flag("--dump", dump, "full JSON dump");

  auto* inv = app.add_subcommand("invariants", "delta0, delta1 and the homology ranks");
  add_common(inv, inv_c, true);
  inv->add_flag("--jump-loci", loci, "add the jump loci report");

  auto* wstar = app.add_subcommand("wstar", "delta1 of the punctured tubular neighbourhood");
  add_common(wstar, wstar_c, true);
  auto* boundary = app.add_subcommand("boundary", "boundary manifold ratio delta1/delta0 (1-dimensional twists)");
  add_common(boundary, boundary_c, true);
  auto* bounds = app.add_subcommand("bounds", "divisor, refined and infinity bounds");
  add_common(bounds, bounds_c, true);
  bounds->add_flag("--check-roots", check_roots, "check root containment of delta0 and delta1");

  std::string falk_a1 = "falk-a1", falk_a2 = "falk-a2";
  long max_n = 101;
  bool falk_pretty = false;
  auto* falk = app.add_subcommand("falk", "parity certificate separating the Falk pair");
  falk->add_option("--a1", falk_a1, "first arrangement");
  falk->add_option("--a2", falk_a2, "second arrangement");
  falk->add_option("--max-conductor", max_n, "search bound for the character conductor");
  falk->add_flag("--pretty", falk_pretty, "human readable output");

  std::vector<std::string> verify_files;
  std::string verify_twist;
  bool verify_relaxed = false, no_corpus = false, verify_pretty = false;
  unsigned workers = 0;
  auto* ver = app.add_subcommand("verify", "run every check over the bundled corpus and the given files");
  ver->add_option("arrangements", verify_files, "extra arrangement files");
  ver->add_option("-t,--twist", verify_twist, "twist for the extra files (default: standard twists)");
  ver->add_flag("--relaxed-epsilon", verify_relaxed, "allow non-positive epsilon");
  ver->add_option("-j,--workers", workers, "worker threads (0: all cores)");
  ver->add_flag("--no-corpus", no_corpus, "only check the given files");
  ver->add_flag("--pretty", verify_pretty, "one line per case");

  std::string corpus_dir;
  auto* corp = app.add_subcommand("corpus", "list the bundled arrangements or write them as JSON");
  corp->add_option("--write", corpus_dir, "directory to write <name>.json files into");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*present) return cmd_present(present_c, reduce);
    if (*graph) return cmd_graph(graph_c, dump);
    if (*inv) return cmd_invariants(inv_c, loci);
    if (*wstar) return cmd_closed(wstar_c, "wstar", false);
    if (*boundary) return cmd_closed(boundary_c, "boundary", false);
    if (*bounds) return cmd_closed(bounds_c, "bounds", check_roots);
    if (*falk) return cmd_falk(falk_a1, falk_a2, max_n, falk_pretty);
    if (*ver) return cmd_verify(verify_files, verify_twist, verify_relaxed, workers, no_corpus, verify_pretty);
    if (*corp) return cmd_corpus(corpus_dir);
  } catch (const Error& e) {
    std::cout << error_json(error_code_name(e.code()), e.what()) << "\n";
    std::cerr << "arrangealex: " << e.what() << "\n";
    return e.code() == ErrorCode::internal ? kCheckFailed : kInputError;
  } catch (const std::exception& e) {
    std::cout << error_json("internal_error", e.what()) << "\n";
    std::cerr << "arrangealex: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}
