#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrangealex/closed_forms.hpp"

namespace arrangealex {

// (zeta_N^c t^e - 1)^mult
struct BinomialFactor {
  long c = 0;
  long e = 1;
  long mult = 1;
  std::string label;
};

// Roots zeta_L^k with multiplicities.
struct RootMultiset {
  long modulus = 1;
  std::map<long, long> counts;
  long total() const;
  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;
};

RootMultiset roots_of_binomials(const std::vector<BinomialFactor>& factors, long n);
// re-expressed over a multiple of the current modulus
RootMultiset lift(const RootMultiset& rm, long modulus);
RootMultiset merge(const RootMultiset& a, const RootMultiset& b);
bool disjoint(const RootMultiset& a, const RootMultiset& b);

std::string root_name(long modulus, long k);  // "zeta_L^k"

struct ParityProfile {
  bool all_even = true;
  std::vector<std::pair<long, long>> odd_multiplicities;  // (k, mult)
  std::map<long, long> multiplicity_histogram;            // mult -> #roots
};

ParityProfile parity_profile(const RootMultiset& rm);

// c with zeta_m^c == x, if x is an m-th root of unity.
std::optional<long> discrete_log(const Scalar& x, long m);

// 1-dimensional twist whose values are roots of unity: rho(a_j) = zeta_M^{c_j}.
struct CyclotomicCharacter {
  long modulus = 1;
  std::vector<long> c;
};

std::optional<CyclotomicCharacter> as_character(const TwistSpec& spec);

// Loop factors of a factored polynomial as binomials over the character's
// modulus, normalized to e >= 1. Throws unsupported on non-loop factors.
std::vector<BinomialFactor> binomials_of(const FactoredPoly& f, const TwistSpec& spec,
                                         const CyclotomicCharacter& ch);

// radical(p) | radical(bound)
bool root_containment(const CanonicalPoly& p, const CanonicalPoly& bound);

// Multiplicity of zeta_L^k as a root of p (coefficients embedded in Q(zeta_L)).
long root_multiplicity(const CanonicalPoly& p, long big_l, long k);

struct UnityRoots {
  long order = 1;
  long count = 0;               // primitive order-th roots of the radical
  std::vector<long> exponents;  // k with zeta_order^k a root, when resolved
  std::vector<long> multiplicities;
};

struct LocusDescriptor {
  CanonicalPoly radical;
  std::vector<UnityRoots> roots_of_unity;
  long other_roots = 0;  // roots of the radical that are not roots of unity
};

LocusDescriptor describe_roots(const CanonicalPoly& p, long conductor);

struct JumpLociReport {
  long threshold = 1;     // d*|chi| + 1
  LocusDescriptor level1; // roots of Delta0 * Delta1
  LocusDescriptor deep;   // roots of Delta1
};

JumpLociReport jump_loci_report(const CanonicalPoly& delta0, const CanonicalPoly& delta1, std::size_t d, long chi,
                                long conductor);

struct FalkCertificate {
  std::vector<long> epsilon;
  long modulus = 1;
  std::vector<long> c;
  RootMultiset a1_roots, a2_roots;
  ParityProfile a1_profile, a2_profile;
  FactoredPoly a1_ratio, a2_ratio;
  bool disjoint = false;
  bool distinguished = false;
  std::size_t candidates_tried = 0;
};

struct FalkSearchOptions {
  std::vector<long> epsilon{1, 2, 3, 4, 5};
  long max_conductor = 101;
  unsigned workers = 0;  // 0: hardware concurrency
};

// Throws precondition when the bounded search finds nothing.
FalkCertificate falk_distinguish(const Arrangement& a1, const Arrangement& a2, const FalkSearchOptions& opt = {});

}  // namespace arrangealex
