#include <doctest.h>

#include "arrangealex/corpus.hpp"
#include "arrangealex/marked_graph.hpp"

using namespace arrangealex;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("four-line tree frame and sweep") {
  const Arrangement& arr = corpus_case("four-line-tree").arrangement;
  FramedArrangement fa = choose_generic_frame(arr, 0);
  CHECK(fa.frame.shear.is_zero());
  CHECK(fa.frame.half_width == R(1, 18));
  std::vector<std::pair<Rational, Rational>> path{
      {R(-1), R(0)}, {R(1, 18), R(0)}, {R(4, 9), R(-1, 2)}, {R(5, 9), R(-1, 2)}, {R(11, 18), R(0)}, {R(5, 3), R(0)}};
  REQUIRE(fa.frame.path.size() == path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    CHECK(fa.frame.path[i].x == path[i].first);
    CHECK(fa.frame.path[i].y == path[i].second);
  }
  CHECK(verify_assumptions(arr, fa.frame).all_passed());

  MarkedTwoGraph g = trace_graph(arr, fa.frame);
  struct Want {
    Rational x;
    bool actual;
    int sign;
    std::vector<std::size_t> lines;
  };
  std::vector<Want> want{{R(0), true, 0, {1, 2, 3}},     {R(1, 11), false, -1, {}}, {R(1, 2), true, 0, {0, 2}},
                         {R(9, 16), false, +1, {}},       {R(11, 19), false, +1, {}}, {R(2, 3), true, 0, {0, 3}},
                         {R(1), false, -1, {}}};
  REQUIRE(g.crossings.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const Crossing& c = g.crossings[i];
    CAPTURE(i);
    CHECK(c.x1 == want[i].x);
    CHECK((c.kind == CrossingKind::actual) == want[i].actual);
    if (want[i].actual) {
      std::vector<std::size_t> s = c.strands;
      std::sort(s.begin(), s.end());
      CHECK(s == want[i].lines);
    } else {
      CHECK(c.sign == want[i].sign);
    }
  }
  CHECK(g.actual_count() == 3);
  CHECK(g.virtual_count() == 4);
}

TEST_CASE("a vertical line forces a shear") {
  const Arrangement& arr = corpus_case("two-crossing-lines").arrangement;
  GenericFrame bad = frame_for_shear(arr, GaussianRational(0));
  AssumptionReport rep = verify_assumptions(arr, bad);
  CHECK(!rep.all_passed());
  bool named = false;
  for (const auto& r : rep.results) named = named || (r.name == "no_vertical_lines" && !r.passed);
  CHECK(named);
  FramedArrangement fa = choose_generic_frame(arr, 0);
  CHECK(!fa.frame.shear.is_zero());
  CHECK(verify_assumptions(arr, fa.frame).all_passed());
}

TEST_CASE("every corpus arrangement admits a generic frame under its seed") {
  for (const auto& c : bundled_corpus()) {
    CAPTURE(c.name);
    FramedArrangement fa = choose_generic_frame(c.arrangement, c.seed);
    CHECK(verify_assumptions(c.arrangement, fa.frame).all_passed());
    MarkedTwoGraph g = trace_graph(c.arrangement, fa.frame);
    CHECK(g.actual_count() == singular_points(c.arrangement).size());
    // every line's strand ends somewhere
    std::vector<std::size_t> f = g.final_order;
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == i);
  }
}

TEST_CASE("frame choice is deterministic in the seed") {
  const Arrangement& arr = corpus_case("two-crossing-lines").arrangement;
  CHECK(choose_generic_frame(arr, 5).frame.shear == choose_generic_frame(arr, 5).frame.shear);
}
