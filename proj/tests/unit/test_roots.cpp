#include <doctest.h>

#include <random>

#include "arrangealex/corpus.hpp"
#include "arrangealex/roots.hpp"

using namespace arrangealex;

namespace {

CanonicalPoly N(const char* s) { return normalize(parse_laurent(s)); }

}  // namespace

TEST_CASE("roots of single binomials") {
  RootMultiset a = roots_of_binomials({{0, 1, 1, ""}}, 1);
  CHECK(a.modulus == 1);
  CHECK(a.counts == std::map<long, long>{{0, 1}});
  RootMultiset b = roots_of_binomials({{0, 2, 1, ""}}, 1);
  CHECK(b.modulus == 2);
  CHECK(b.counts == std::map<long, long>{{0, 1}, {1, 1}});
  RootMultiset c = roots_of_binomials({{1, 1, 3, ""}}, 11);
  CHECK(c.modulus == 11);
  CHECK(c.counts == std::map<long, long>{{10, 3}});
  // zeta11 * zeta11^-1 - 1 = 0
  CHECK((Scalar::zeta(11) * Scalar::zeta(11, 10) - Scalar(1)).is_zero());
}

TEST_CASE("total multiplicity and lifting") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(0, 20), e(1, 6), m(1, 3);
  for (int it = 0; it < 50; ++it) {
    long n = 1 + it % 9;
    std::vector<BinomialFactor> fs;
    long want = 0;
    for (int k = 0; k < 1 + it % 4; ++k) {
      fs.push_back({c(rng), e(rng), m(rng), ""});
      want += fs.back().e * fs.back().mult;
    }
    RootMultiset rm = roots_of_binomials(fs, n);
    CHECK(rm.total() == want);
    CHECK(lift(rm, rm.modulus * 3).total() == want);
    // doubling makes every multiplicity even
    CHECK(parity_profile(merge(rm, rm)).all_even);
  }
}

TEST_CASE("parity profiles") {
  RootMultiset r{4, {{0, 2}, {1, 2}}};
  CHECK(parity_profile(r).all_even);
  r.counts[3] = 3;
  ParityProfile p = parity_profile(r);
  CHECK(!p.all_even);
  CHECK(p.odd_multiplicities == std::vector<std::pair<long, long>>{{3, 3}});
  CHECK(p.multiplicity_histogram == std::map<long, long>{{2, 2}, {3, 1}});
}

TEST_CASE("residue arithmetic agrees with evaluation in the root field") {
  // every binomial product with small L, checked root by root
  for (long n : {1L, 2L, 3L, 4L, 6L}) {
    for (long c1 = 0; c1 < n; ++c1)
      for (long e1 : {1L, 2L, 3L, 4L})
        for (long e2 : {1L, 2L}) {
          long c2 = (c1 + 1) % n;
          std::vector<BinomialFactor> fs{{c1, e1, 1, ""}, {c2, e2, 2, ""}};
          RootMultiset rm = roots_of_binomials(fs, n);
          if (rm.modulus > 24) continue;
          CanonicalPoly p = normalize(LaurentPoly::monomial(Scalar::zeta(n, c1), e1) - LaurentPoly(1)) *
                            normalize(LaurentPoly::monomial(Scalar::zeta(n, c2), e2) - LaurentPoly(1)).pow(2);
          for (long k = 0; k < rm.modulus; ++k) {
            CAPTURE(k);
            long want = rm.counts.count(k) ? rm.counts.at(k) : 0;
            CHECK(root_multiplicity(p, rm.modulus, k) == want);
          }
        }
  }
}

TEST_CASE("root containment") {
  CHECK(root_containment(N("t^3 - 3*t^2 + 3*t - 1"), N("t^2 - 1")));
  CHECK(!root_containment(N("t^2 + 1"), N("t - 1")));
  CHECK(root_containment(N("t + 1"), N("t^4 - 1")));
  // reflexive and transitive on a chain
  CanonicalPoly a = N("t - 1"), b = N("t^2 - 1"), c = N("t^6 - 1");
  CHECK(root_containment(a, a));
  CHECK(root_containment(a, b));
  CHECK(root_containment(b, c));
  CHECK(root_containment(a, c));
}

TEST_CASE("discrete logs and characters") {
  CHECK(discrete_log(Scalar::zeta(7, 3), 7) == 3);
  CHECK(discrete_log(Scalar(-1), 2) == 1);
  CHECK(discrete_log(-Scalar::zeta(5), 10) == 7);
  CHECK(!discrete_log(Scalar(2), 4));
  TwistSpec s{FieldConfig{5}, {1, 1}, {ScalarMatrix::scalar(1, -Scalar::zeta(5)), ScalarMatrix::scalar(1, Scalar(1))}};
  auto ch = as_character(s);
  REQUIRE(ch);
  CHECK(ch->modulus == 10);
  CHECK(ch->c == std::vector<long>{7, 0});
}

TEST_CASE("describing roots of unity") {
  LocusDescriptor d = describe_roots(N("t^4 - 1") * N("t^2 - 2"), 1);
  CHECK(d.other_roots == 2);
  long total = 0;
  for (const auto& u : d.roots_of_unity) total += u.count;
  CHECK(total == 4);
  LocusDescriptor e = describe_roots(N("zeta3*t - 1"), 3);
  REQUIRE(e.roots_of_unity.size() == 1);
  CHECK(e.roots_of_unity[0].order == 3);
  CHECK(e.roots_of_unity[0].exponents == std::vector<long>{2});
}

TEST_CASE("jump loci") {
  JumpLociReport r = jump_loci_report(N("t - 1"), N("t - 1"), 1, 0, 1);
  CHECK(r.threshold == 1);
  CHECK(r.level1.radical == N("t - 1"));
  JumpLociReport empty = jump_loci_report(N("t - 1"), CanonicalPoly::one(), 1, 1, 1);
  CHECK(empty.threshold == 2);
  CHECK(empty.deep.roots_of_unity.empty());
  CHECK(empty.deep.other_roots == 0);
}

TEST_CASE("falk certificate") {
  FalkCertificate cert = falk_distinguish(corpus_case("falk-a1").arrangement, corpus_case("falk-a2").arrangement);
  CHECK(cert.distinguished);
  CHECK(cert.disjoint);
  CHECK(cert.a1_profile.all_even);
  CHECK(cert.a2_profile.multiplicity_histogram.count(3));
  CHECK(cert.a2_profile.multiplicity_histogram.count(1));
  CHECK(cert.epsilon == std::vector<long>{1, 2, 3, 4, 5});
  // deterministic regardless of worker count
  FalkSearchOptions one;
  one.workers = 1;
  FalkCertificate again = falk_distinguish(corpus_case("falk-a1").arrangement, corpus_case("falk-a2").arrangement, one);
  CHECK(again.modulus == cert.modulus);
  CHECK(again.c == cert.c);
}
