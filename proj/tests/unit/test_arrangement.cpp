#include <doctest.h>

#include "arrangealex/arrangement.hpp"
#include "arrangealex/corpus.hpp"
#include "arrangealex/error.hpp"

using namespace arrangealex;

namespace {

const Arrangement& A(const char* name) { return corpus_case(name).arrangement; }

}  // namespace

TEST_CASE("four-line tree: one triple point, two double points") {
  auto pts = singular_points(A("four-line-tree"));
  REQUIRE(pts.size() == 3);
  auto inc = incidence_summary(A("four-line-tree"));
  CHECK(inc.s == 3);
  CHECK(inc.s_i == std::vector<std::size_t>{2, 1, 2, 2});
  CHECK(inc.euler_chi == 1);
  std::vector<std::size_t> d = inc.d;
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::size_t>{2, 2, 3});
  // the triple point is the origin, lines 2, 3, 4
  bool found = false;
  for (const auto& p : pts)
    if (p.multiplicity() == 3) {
      found = true;
      CHECK(p.coords.z1.is_zero());
      CHECK(p.coords.z2.is_zero());
      CHECK(p.incident == std::vector<std::size_t>{1, 2, 3});
    }
  CHECK(found);
}

TEST_CASE("falk pair incidence") {
  auto a1 = incidence_summary(A("falk-a1"));
  CHECK(a1.s == 7);
  CHECK(a1.euler_chi == 4);
  // x + y = 0, y = 0, x - y = 0 meet both verticals and each other at 0
  CHECK(a1.s_i == std::vector<std::size_t>{3, 3, 3, 3, 3});
  std::size_t sum_d = 0;
  for (auto x : a1.d) sum_d += x;
  CHECK(sum_d == 15);
  auto a2 = incidence_summary(A("falk-a2"));
  CHECK(a2.s == 8);
  CHECK(a2.euler_chi == 4);
  CHECK(a2.s_i == std::vector<std::size_t>{3, 3, 3, 3, 4});
}

TEST_CASE("projective completion") {
  ProjectiveCompletion a1 = projectivize(A("falk-a1"));
  CHECK(a1.direction_classes.size() == 4);
  CHECK(a1.s_tilde == std::vector<std::size_t>{4, 4, 4, 4, 4, 4});
  ProjectiveCompletion a2 = projectivize(A("falk-a2"));
  CHECK(a2.direction_classes.size() == 3);
  CHECK(a2.s_tilde == std::vector<std::size_t>{3, 4, 4, 4, 4, 5});
  std::vector<std::size_t> mult = a2.infinity_multiplicity;
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<std::size_t>{2, 3, 3});
}

TEST_CASE("essential arrangements and chi") {
  CHECK(is_essential(A("pencil-4")));
  auto p = incidence_summary(A("pencil-4"));
  CHECK(p.s == 1);
  CHECK(p.d == std::vector<std::size_t>{4});
  CHECK(p.euler_chi == 1 - 4 + 3);
  CHECK(incidence_summary(A("two-crossing-lines")).euler_chi == 0);
  CHECK(incidence_summary(A("three-generic-lines")).euler_chi == 1);
  CHECK(incidence_summary(A("parallel-pair-transversal")).euler_chi == 0);
  Arrangement par{{{GaussianRational(0), GaussianRational(1), GaussianRational(0)},
                   {GaussianRational(0), GaussianRational(1), GaussianRational(1)}}};
  CHECK(!is_essential(par));
  CHECK_THROWS_AS(incidence_summary(par), Error);
}

TEST_CASE("parallel-free lines") {
  CHECK(parallel_free_lines(A("falk-a1")) == std::vector<std::size_t>{2, 3, 4});
  CHECK(parallel_free_lines(A("falk-a2")) == std::vector<std::size_t>{4});
  CHECK(parallel_free_lines(A("four-line-tree")) == std::vector<std::size_t>{2, 3});
  CHECK(parallel_free_lines(A("two-crossing-lines")).size() == 2);
}

TEST_CASE("validation rejects degenerate and repeated lines") {
  Arrangement zero{{{GaussianRational(0), GaussianRational(0), GaussianRational(1)}}};
  CHECK_THROWS_AS(zero.validate(), Error);
  Arrangement twice{{{GaussianRational(1), GaussianRational(1), GaussianRational(1)},
                     {GaussianRational(2), GaussianRational(2), GaussianRational(2)}}};
  CHECK_THROWS_AS(twice.validate(), Error);
}
