#include <doctest.h>

#include <random>

#include "arrangealex/error.hpp"
#include "arrangealex/laurent.hpp"

using namespace arrangealex;

namespace {

LaurentPoly P(std::string_view s) { return parse_laurent(s); }

LaurentPoly random_poly(std::mt19937_64& rng, long conductor, int max_deg) {
  std::uniform_int_distribution<long> c(-3, 3), deg(0, max_deg), val(-2, 2);
  std::vector<Scalar> co;
  for (int k = 0, n = deg(rng); k <= n; ++k) {
    Scalar s(c(rng));
    if (conductor > 1 && k % 2) s = s + Scalar::zeta(conductor, c(rng));
    co.push_back(s);
  }
  return LaurentPoly::from_coeffs(val(rng), co);
}

}  // namespace

TEST_CASE("printing and parsing round trip") {
  LaurentPoly p = P("t^3 - 2*t + 1");
  CHECK(to_string(p) == "t^3 - 2*t + 1");
  CHECK(P(to_string(p)) == p);
  CHECK(to_string(P("t^-2 + 3")) == "3 + t^-2");
  CHECK(P("(zeta5^2)*t - 1") == LaurentPoly::monomial(Scalar::zeta(5, 2), 1) - LaurentPoly(1));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("t^"), Error);
}

TEST_CASE("unit normalization") {
  CanonicalPoly c = normalize(P("3*t^-2 - 3*t^-1"));
  CHECK(to_string(c) == "t - 1");
  CHECK(normalize(P("-2*t^5")).is_one());
  CHECK(normalize(P("zeta3*t^2 - zeta3")) == normalize(P("t^2 - 1")));
  CHECK_THROWS_AS(normalize(LaurentPoly()), Error);
  // det(id - X) and det(X - id) agree after normalization
  CHECK(normalize(P("1 - t^3")) == normalize(P("t^3 - 1")));
  // t^-e x^-1 - 1 is a unit multiple of t^e x - 1
  CHECK(normalize(P("(zeta7^6)*t^-2 - 1")) == normalize(P("(zeta7)*t^2 - 1")));
}

TEST_CASE("division and gcd") {
  CHECK(to_string(gcd(P("t^2 - 1"), P("t^3 - 1"))) == "t - 1");
  CHECK(gcd(P("t^2 + 1"), P("t - 1")).is_one());
  CHECK(divides(P("t - 1"), P("t^3 - 1")));
  CHECK(!divides(P("t + 1"), P("t^3 - 1")));
  CHECK(*divide_exact(P("t^3 - 1"), P("t - 1")) == P("t^2 + t + 1"));
  CHECK(!divide_exact(P("t^3 - 1"), P("t + 1")));
  CHECK(to_string(radical(normalize(P("t^4 - 2*t^3 + 2*t - 1")))) == "t^2 - 1");
  // t is a unit
  CHECK(to_string(lcm(normalize(P("t^2 - 1")), normalize(P("t^2 + t")))) == "t^2 - 1");
  CHECK(to_string(lcm(normalize(P("t^2 - 1")), normalize(P("t^2 + 2*t + 1")))) == "t^3 + t^2 - t - 1");
  // over Q(zeta_3): t^2 + t + 1 = (t - zeta3)(t - zeta3^2)
  CHECK(divides(P("t - zeta3"), P("t^2 + t + 1")));
}

TEST_CASE("division identity and gcd properties on random polynomials") {
  std::mt19937_64 rng(11);
  for (long n : {1L, 3L, 4L}) {
    for (int it = 0; it < 40; ++it) {
      LaurentPoly a = random_poly(rng, n, 5), b = random_poly(rng, n, 3);
      if (b.is_zero()) continue;
      auto qr = divmod(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK(qr.remainder.spread() < b.spread());
      if (a.is_zero()) continue;
      CanonicalPoly g = gcd(a, b);
      CHECK(divides(g.poly(), a));
      CHECK(divides(g.poly(), b));
      LaurentPoly c = random_poly(rng, n, 2);
      if (c.is_zero()) continue;
      // gcd(ac, bc) = gcd(a, b) * c up to units
      CHECK(gcd(a * c, b * c) == g * normalize(c));
    }
  }
}

TEST_CASE("evaluation and derivative") {
  LaurentPoly p = P("t^3 - 1");
  CHECK(p.eval(Scalar::zeta(3)).is_zero());
  CHECK(!p.eval(Scalar::zeta(4)).is_zero());
  CHECK(p.derivative() == P("3*t^2"));
  CHECK(P("t^-1").derivative() == P("-t^-2"));
  CHECK(P("t - 1").pow(3) == P("t^3 - 3*t^2 + 3*t - 1"));
}
