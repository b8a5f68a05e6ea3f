#include <doctest.h>

#include <json.hpp>

#include "arrangealex/corpus.hpp"
#include "arrangealex/error.hpp"
#include "arrangealex/io.hpp"

using namespace arrangealex;
using nlohmann::json;

TEST_CASE("arrangement files round trip") {
  for (const auto& c : bundled_corpus()) {
    std::string text = arrangement_json({c.name, c.arrangement, c.seed});
    ArrangementFile f = parse_arrangement(text);
    CHECK(f.name == c.name);
    REQUIRE(f.arrangement.size() == c.arrangement.size());
    for (std::size_t i = 0; i < f.arrangement.size(); ++i) CHECK(same_line(f.arrangement.lines[i], c.arrangement.lines[i]));
    CHECK(digest(f.arrangement) == digest(c.arrangement));
  }
}

TEST_CASE("arrangement input forms") {
  ArrangementFile f = parse_arrangement(R"({"lines": [[1, 0, 0], {"a": 0, "b": "1", "c": "-1/2"}, ["1", "i", 0]]})");
  CHECK(f.arrangement.size() == 3);
  CHECK(f.arrangement.lines[1].c == GaussianRational(make_rational(-1, 2)));
  CHECK(f.arrangement.lines[2].b == GaussianRational::i_unit());
  CHECK_THROWS_AS(parse_arrangement("{"), Error);
  CHECK_THROWS_AS(parse_arrangement(R"({"lines": [[1, 0]]})"), Error);
  CHECK_THROWS_AS(parse_arrangement(R"({"lines": [[1.5, 0, 0]]})"), Error);
  CHECK_THROWS_AS(parse_arrangement(R"({"lines": [[0, 0, 1]]})"), Error);
}

TEST_CASE("twist files") {
  TwistSpec s = parse_twist(R"({"field": {"conductor": 5}, "epsilon": [1, 2],
                                "rho": [{"zeta": 2}, "1/2 - zeta5"]})", 2);
  CHECK(s.field.conductor == 5);
  CHECK(s.rho[0](0, 0) == Scalar::zeta(5, 2));
  CHECK(s.rho[1](0, 0) == Scalar(make_rational(1, 2)) - Scalar::zeta(5));
  TwistSpec back = parse_twist(twist_json(s), 2);
  CHECK(back.rho == s.rho);
  CHECK(back.epsilon == s.epsilon);
  TwistSpec m = parse_twist(R"({"field": "Q", "rho": [[[1, 1], [0, 1]], [[2, 0], [0, 2]]]})", 2);
  CHECK(m.dim() == 2);
  CHECK(m.epsilon == std::vector<long>{1, 1});
  TwistSpec t = parse_twist("{}", 3);
  CHECK(t.rho.size() == 3);
  CHECK_THROWS_AS(parse_twist(R"({"epsilon": [1]})", 2), Error);
  CHECK_THROWS_AS(parse_twist(R"({"field": {"conductor": 5}, "rho": ["zeta3"]})", 1), Error);
  CHECK_THROWS_AS(parse_twist(R"({"rho": [[[1, 0]]]})", 1), Error);
  // subfield elements embed
  TwistSpec e = parse_twist(R"({"field": {"conductor": 6}, "rho": ["zeta3"]})", 1);
  CHECK(e.rho[0](0, 0) == Scalar::zeta(6, 2));
}

TEST_CASE("reports carry the schema tag and are stable") {
  const auto& c = corpus_case("four-line-tree");
  Presentation p = presentation(c.arrangement, c.seed);
  FramedArrangement fa = choose_generic_frame(c.arrangement, c.seed);
  WordPropagation w = propagate_words(trace_graph(c.arrangement, fa.frame));
  std::string a = presentation_json(p, w, fa.frame, c.name), b = presentation_json(p, w, fa.frame, c.name);
  CHECK(a == b);
  json j = json::parse(a);
  CHECK(j["schema"] == "arrangealex/1");
  CHECK(j["text"] == "<a, b, c, d | [bcd, b], [bcd, c], [ac, a], [c^-1acd, a^{c}]>");
  CHECK(json::parse(error_json("parse_error", "x"))["error"]["code"] == "parse_error");
  CHECK(presentation_text(surface_times_circle(1)) == "<a, b | [a, b]>");
}
