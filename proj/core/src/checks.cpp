#include "arrangealex/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <thread>

#include "arrangealex/closed_forms.hpp"
#include "arrangealex/error.hpp"
#include "arrangealex/fox.hpp"
#include "arrangealex/marked_graph.hpp"
#include "arrangealex/roots.hpp"

namespace arrangealex {

namespace {

void run(CaseResult& r, const std::string& name, const std::function<std::string()>& body) {
  // body returns "" on success, otherwise the failure detail
  try {
    std::string why = body();
    r.checks.push_back({name, why.empty(), why});
  } catch (const Error& e) {
    r.checks.push_back({name, false, std::string(error_code_name(e.code())) + ": " + e.what()});
  } catch (const std::exception& e) {
    r.checks.push_back({name, false, e.what()});
  }
}

std::string divides_detail(const CanonicalPoly& a, const CanonicalPoly& b) {
  if (divides(a, b)) return "";
  return "(" + to_string(a) + ") does not divide (" + to_string(b) + ")";
}

}  // namespace

CaseResult check_structure(const std::string& name, const Arrangement& arr, std::uint64_t seed) {
  CaseResult r{name, {}};
  FramedArrangement fa;
  run(r, "essential", [&] { return is_essential(arr) ? "" : std::string("no singular point"); });
  run(r, "frame_assumptions", [&] {
    fa = choose_generic_frame(arr, seed);
    auto rep = verify_assumptions(arr, fa.frame);
    return rep.all_passed() ? "" : rep.summary();
  });
  Presentation p;
  run(r, "loop_abelianization", [&]() -> std::string {
    p = presentation(arr, seed);
    const std::size_t m = arr.size();
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      std::vector<long> want(m, 0);
      for (std::size_t j : p.points[k].incident) want[j] = 1;
      if (p.beta[k].abelianization(m) != want) return "beta" + std::to_string(k + 1) + " abelianizes wrongly";
      for (std::size_t i = 0; i < p.local_words[k].size(); ++i) {
        std::vector<long> e(m, 0);
        e[p.local_lines[k][i]] = 1;
        if (p.local_words[k][i].abelianization(m) != e) return "local meridian is not a conjugate of its generator";
      }
    }
    return "";
  });
  run(r, "relation_count", [&]() -> std::string {
    IncidenceSummary inc = incidence_summary(arr);
    std::size_t want = 0;
    for (auto d : inc.d) want += d - 1;
    if (p.relations.size() != want)
      return std::to_string(p.relations.size()) + " relations, expected " + std::to_string(want);
    return "";
  });
  return r;
}

CaseResult check_case(const std::string& name, const Arrangement& arr, std::uint64_t seed, const NamedTwist& twist,
                      const CheckOptions& opt) {
  CaseResult r{name + "/" + twist.name, {}};
  const TwistSpec& spec = twist.spec;
  Presentation pres;
  try {
    pres = presentation(arr, seed);
  } catch (const Error& e) {
    r.checks.push_back({"presentation", false, e.what()});
    return r;
  }
  bool valid = false;
  run(r, "representation_valid", [&] {
    auto v = validate_representation(pres, spec, opt.relaxed_epsilon);
    valid = v.ok;
    return v.ok ? std::string() : v.witness;
  });
  if (!valid) return r;
  TwistedChainComplex cx;
  run(r, "complex_composes_to_zero", [&] {
    cx = build_complex(pres, spec);
    return std::string();
  });
  Delta0Result d0;
  Delta1Result d1;
  IncidenceSummary inc = incidence_summary(arr);
  run(r, "delta0_matches_minors", [&]() -> std::string {
    d0 = delta0_of(cx, spec.dim());
    if (d0.minors && *d0.minors != d0.value)
      return "SNF gives " + to_string(d0.value) + ", minors give " + to_string(*d0.minors);
    return "";
  });
  run(r, "h1_torsion", [&]() -> std::string {
    d1 = delta1_of(cx);
    return d1.h1_free_rank == 0 ? "" : "h1 free rank " + std::to_string(d1.h1_free_rank);
  });
  run(r, "h2_rank_is_dim_chi", [&]() -> std::string {
    long h2 = static_cast<long>(h2_free_rank_of(cx));
    long want = static_cast<long>(spec.dim()) * inc.euler_chi;
    return h2 == want ? "" : "h2 free rank " + std::to_string(h2) + ", d*chi = " + std::to_string(want);
  });
  if (opt.compare_word_policies) {
    run(r, "word_policy_invariance", [&]() -> std::string {
      Presentation alt = presentation(arr, seed, WordPolicy::local_reduced);
      auto c2 = build_complex(alt, spec);
      if (delta0_of(c2, spec.dim()).value != d0.value || delta1_of(c2).value != d1.value)
        return "reduced words change the polynomials";
      return "";
    });
  }
  std::optional<ClosedForms> cf;
  run(r, "closed_forms", [&] {
    cf.emplace(arr, pres, spec);
    return std::string();
  });
  if (!cf) return r;
  run(r, "delta1_divides_wstar", [&] { return divides_detail(d1.value, cf->delta1_wstar().product()); });
  run(r, "delta1_divides_divisor_bound", [&] { return divides_detail(d1.value, cf->divisor_bound().product()); });
  run(r, "wstar_divides_divisor_bound_times_delta0", [&] {
    return divides_detail(cf->delta1_wstar().product(), cf->divisor_bound().product() * d0.value);
  });
  if (auto rb = cf->refined_bound()) {
    CanonicalPoly rp = rb->product();
    run(r, "refined_divides_divisor_bound", [&] { return divides_detail(rp, cf->divisor_bound().product()); });
    run(r, "delta1_divides_refined_bound", [&] { return divides_detail(d1.value, rp); });
  }
  run(r, "roots_at_infinity", [&]() -> std::string {
    CanonicalPoly b = cf->infinity_root_bound().product();
    if (!root_containment(d0.value, b)) return "delta0 has a root outside the bound";
    if (!root_containment(d1.value, b)) return "delta1 has a root outside the bound";
    return "";
  });
  run(r, "torsion_ratio", [&]() -> std::string {
    auto v = cf->torsion_ratio_check();
    if (v.ok) return "";
    return "closed ratio " + to_string(v.closed_ratio) + " vs pieces " + to_string(v.pieces_delta1) + " / " +
           to_string(v.pieces_delta0);
  });
  if (spec.dim() == 1) {
    run(r, "wstar_divides_boundary", [&]() -> std::string {
      auto b = cf->boundary_ratio();
      return divides_detail(cf->delta1_wstar().product(), b->product() * d0.value);
    });
  }
  return r;
}

std::vector<VerifyJob> corpus_jobs() {
  std::vector<VerifyJob> jobs;
  for (const auto& c : bundled_corpus()) jobs.push_back({c.name, c.arrangement, c.seed, {}});
  return jobs;
}

std::vector<CaseResult> verify(const std::vector<VerifyJob>& jobs, unsigned workers, const CheckOptions& opt) {
  // one task per (job, twist) plus one structural task per job
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& j : jobs) {
    tasks.push_back([&j] { return check_structure(j.name + "/structure", j.arrangement, j.seed); });
    std::vector<NamedTwist> twists = j.twists;
    if (twists.empty()) {
      try {
        twists = standard_twists(j.arrangement, presentation(j.arrangement, j.seed));
      } catch (const Error& e) {
        tasks.push_back([name = j.name, what = std::string(e.what())] {
          return CaseResult{name + "/twists", {{"standard_twists", false, what}}};
        });
      }
    }
    for (auto& t : twists)
      tasks.push_back([&j, t, &opt] { return check_case(j.name, j.arrangement, j.seed, t, opt); });
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, tasks.size()); ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i; (i = next++) < tasks.size();) results[i] = tasks[i]();
    }));
  for (auto& f : pool) f.get();
  std::stable_sort(results.begin(), results.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace arrangealex
