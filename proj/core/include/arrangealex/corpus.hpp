#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangealex/arrangement.hpp"
#include "arrangealex/presentation.hpp"
#include "arrangealex/twist.hpp"

namespace arrangealex {

struct CorpusCase {
  std::string name;
  Arrangement arrangement;
  std::uint64_t seed = 0;
};

// four-line-tree, falk-a1, falk-a2, two-crossing-lines, three-generic-lines,
// pencil-4, parallel-pair-transversal
const std::vector<CorpusCase>& bundled_corpus();
const CorpusCase& corpus_case(const std::string& name);

struct NamedTwist {
  std::string name;
  TwistSpec spec;
};

TwistSpec trivial_twist(std::size_t m);
// rho(a_j) = zeta_n^{c_j}, epsilon(a_j) = eps_j
TwistSpec character_twist(long n, const std::vector<long>& c, const std::vector<long>& eps);
// zeta_7^{j+1}, epsilon = 1, 2, 1, 2, ...
TwistSpec generic_character_twist(std::size_t m);
// A non-scalar 2-dimensional representation adapted to the arrangement:
// free matrices on a parallel pair, a centralizing last strand for a
// pencil, conjugated diagonal matrices when pi_1 is abelian. Throws
// unsupported when none of these applies.
TwistSpec two_dimensional_twist(const Arrangement& arr, const Presentation& pres);

// trivial, generic character, and the 2-dimensional one when it exists
std::vector<NamedTwist> standard_twists(const Arrangement& arr, const Presentation& pres);

}  // namespace arrangealex
