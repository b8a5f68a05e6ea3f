#include <doctest.h>

#include "arrangealex/corpus.hpp"
#include "arrangealex/presentation.hpp"
#include "oracles.hpp"

using namespace arrangealex;

namespace {

std::vector<std::string> words(const std::vector<FreeWord>& h, std::size_t m) {
  std::vector<std::string> out;
  for (const auto& w : distinct_history(h)) out.push_back(pretty(w, m));
  return out;
}

}  // namespace

TEST_CASE("four-line tree raw words and relations") {
  const Arrangement& arr = corpus_case("four-line-tree").arrangement;
  Presentation p = presentation(arr, 0);
  CHECK(p.generator_count == 4);
  std::vector<std::string> rels;
  for (const auto& r : p.relations) rels.push_back("[" + pretty(r.beta, 4) + ", " + pretty(r.b, 4) + "]");
  CHECK(rels == std::vector<std::string>{"[bcd, b]", "[bcd, c]", "[ac, a]", "[c^-1acd, a^{c}]"});
  FramedArrangement fa = choose_generic_frame(arr, 0);
  WordPropagation w = propagate_words(trace_graph(arr, fa.frame));
  CHECK(words(w.history[2], 4) == std::vector<std::string>{"c", "c^{d}", "c", "c^{ac}", "c^{acd}", "c^{d}"});
}

TEST_CASE("four-line tree with the local simplification") {
  const Arrangement& arr = corpus_case("four-line-tree").arrangement;
  FramedArrangement fa = choose_generic_frame(arr, 0);
  MarkedTwoGraph g = trace_graph(arr, fa.frame);
  WordPropagation w = propagate_words(g, WordPolicy::local_reduced);
  CHECK(words(w.history[2], 4) == std::vector<std::string>{"c", "c^{b^-1}", "c^{b^-1d^-1}", "c^{b^-1d^-1a}",
                                                           "c^{b^-1d^-1ad}", "c^{b^-1d^-1ada^-1}"});
  Presentation p = presentation_from_graph(g, WordPolicy::local_reduced);
  std::vector<std::string> rels;
  for (const auto& r : p.relations) rels.push_back("[" + pretty(r.beta, 4) + ", " + pretty(r.b, 4) + "]");
  CHECK(rels == std::vector<std::string>{"[bcd, b]", "[bcd, c]", "[adbcb^-1d^-1, a]", "[ad, a]"});
}

TEST_CASE("both word policies present the same group") {
  // homomorphisms into S4; F2 x F2 has 3360 of them
  const Arrangement& arr = corpus_case("four-line-tree").arrangement;
  Presentation raw = presentation(arr, 0), red = presentation(arr, 0, WordPolicy::local_reduced);
  CHECK(oracle::count_homs(raw, 4) == 3360);
  CHECK(oracle::count_homs(red, 4) == 3360);
}

TEST_CASE("F2 x F2 oracle count") {
  Presentation p;
  p.generator_count = 4;
  for (std::size_t i : {0, 1})
    for (std::size_t j : {2, 3}) p.relations.push_back({FreeWord::generator(i), FreeWord::generator(j), 0});
  CHECK(oracle::count_homs(p, 4) == 3360);
}

TEST_CASE("relations per point and beta shape") {
  for (const auto& c : bundled_corpus()) {
    CAPTURE(c.name);
    Presentation p = presentation(c.arrangement, c.seed);
    std::size_t want = 0;
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      want += p.points[k].multiplicity() - 1;
      FreeWord prod;
      for (const auto& w : p.local_words[k]) prod *= w;
      CHECK(prod == p.beta[k]);
    }
    CHECK(p.relations.size() == want);
  }
}

TEST_CASE("pencil and abelian cases") {
  Presentation pen = presentation(corpus_case("pencil-4").arrangement, 0);
  REQUIRE(pen.points.size() == 1);
  CHECK(pen.relations.size() == 3);
  // F3 x Z into S3: sum of |C(z)|^3
  CHECK(oracle::count_homs(pen, 3) == 216 + 3 * 8 + 2 * 27);
  Presentation two = presentation(corpus_case("two-crossing-lines").arrangement, 0);
  CHECK(oracle::count_homs(two, 3) == 18);  // commuting pairs in S3
}

TEST_CASE("word parsing and printing") {
  FreeWord w = parse_word("c^{bd^-1}", 4);
  CHECK(to_string(w) == "a4 a2^-1 a3 a2 a4^-1");
  CHECK(pretty(w, 4) == "c^{bd^-1}");
  CHECK(parse_word(to_string(w), 4) == w);
  CHECK(to_string(FreeWord()) == "1");
  CHECK(commutator(FreeWord::generator(0), FreeWord::generator(0)).empty());
  CHECK(w.abelianization(4) == std::vector<long>{0, 0, 1, 0});
}

TEST_CASE("surface times circle") {
  Presentation p = surface_times_circle(2);
  CHECK(p.generator_count == 3);
  CHECK(p.relations.size() == 2);
  // F2 x Z into S3: for each z, Hom(F2, centralizer)
  CHECK(oracle::count_homs(p, 3) == 36 + 3 * 4 + 2 * 9);
}
