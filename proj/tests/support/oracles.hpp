#pragma once

// Slow, obviously-correct reference computations for the tests.

#include <array>
#include <cstdint>
#include <vector>

#include "arrangealex/fox.hpp"
#include "arrangealex/poly_matrix.hpp"
#include "arrangealex/presentation.hpp"

namespace oracle {

using namespace arrangealex;

using Perm = std::vector<int>;

std::vector<Perm> symmetric_group(int n);
Perm compose(const Perm& a, const Perm& b);  // a then b
Perm inverse(const Perm& a);

// Number of homomorphisms from the presented group to S_n, by brute force.
std::uint64_t count_homs(const Presentation& p, int n);

// d2 assembled from expanded Fox derivatives, one group ring element at a time.
PolyMatrix fox_matrix_expanded(const Presentation& p, const TwistSpec& spec);

// Laplace expansion along the first row.
LaurentPoly laplace_det(const PolyMatrix& m);

// gcd of all k x k minors, each computed by Laplace expansion.
CanonicalPoly fitting_gcd(const PolyMatrix& m, std::size_t k);

}  // namespace oracle
