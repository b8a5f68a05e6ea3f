#pragma once

#include <map>
#include <optional>

#include "arrangealex/poly_matrix.hpp"
#include "arrangealex/twist.hpp"

namespace arrangealex {

// Finite integer combination of freely reduced words.
class GroupRingElement {
 public:
  void add(const FreeWord& w, long c);
  const std::map<FreeWord, long>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  GroupRingElement& operator+=(const GroupRingElement& o);
  // left multiplication by a word
  GroupRingElement left_mul(const FreeWord& u) const;
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<FreeWord, long> t_;
};

std::string to_string(const GroupRingElement& g);

GroupRingElement fox_derivative(const FreeWord& w, std::size_t j);

// d x d blocks over F[t^±1]
PolyMatrix evaluate(const FreeWord& w, const TwistEvaluator& ev);
PolyMatrix evaluate(const GroupRingElement& g, const TwistEvaluator& ev);
PolyMatrix scalar_block(const WordImage& img);

struct TwistedChainComplex {
  PolyMatrix d2;  // (R*d) x (m*d)
  PolyMatrix d1;  // (m*d) x d
};

TwistedChainComplex build_complex(const Presentation& pres, const TwistSpec& spec);

struct Delta0Result {
  CanonicalPoly value;                   // torsion order of coker(d1)
  std::optional<CanonicalPoly> minors;   // literal gcd of d x d minors, when cheap enough
};

struct Delta1Result {
  CanonicalPoly value;
  std::size_t h1_free_rank = 0;
};

Delta0Result delta0_of(const TwistedChainComplex& cx, std::size_t dim);
Delta1Result delta1_of(const TwistedChainComplex& cx);
std::size_t h2_free_rank_of(const TwistedChainComplex& cx);

CanonicalPoly delta0(const Presentation& pres, const TwistSpec& spec);
Delta1Result delta1(const Presentation& pres, const TwistSpec& spec);
std::size_t h2_free_rank(const Presentation& pres, const TwistSpec& spec);

// For d = 1: gcd_j normalize(t^eps_j rho(a_j) - 1).
CanonicalPoly delta0_rank_one(const TwistSpec& spec);

// det(t^e M - I) for a word image
LaurentPoly char_det(const WordImage& img);

}  // namespace arrangealex
