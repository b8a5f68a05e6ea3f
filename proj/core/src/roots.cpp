#include "arrangealex/roots.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <thread>

#include "arrangealex/error.hpp"
#include "arrangealex/rational.hpp"

namespace arrangealex {

long RootMultiset::total() const {
  long s = 0;
  for (const auto& [k, c] : counts) s += c;
  return s;
}

RootMultiset roots_of_binomials(const std::vector<BinomialFactor>& factors, long n) {
  if (n < 1) fail(ErrorCode::precondition, "conductor must be positive");
  long e_all = 1;
  for (const auto& f : factors) {
    if (f.e < 1) fail(ErrorCode::precondition, "binomial factor needs e >= 1");
    e_all = lcm_long(e_all, f.e);
  }
  RootMultiset rm;
  rm.modulus = n * e_all;
  for (const auto& f : factors) {
    if (f.mult == 0) continue;
    // t^e = zeta_n^-c  <=>  t = zeta_{n e}^j, j = -c (mod n)
    long j0 = mod_long(-f.c, n), scale = rm.modulus / (n * f.e);
    for (long r = 0; r < f.e; ++r) rm.counts[(j0 + n * r) * scale] += f.mult;
  }
  return rm;
}

RootMultiset lift(const RootMultiset& rm, long modulus) {
  if (modulus % rm.modulus != 0) fail(ErrorCode::precondition, "lift needs a multiple of the modulus");
  RootMultiset out;
  out.modulus = modulus;
  for (const auto& [k, c] : rm.counts) out.counts[k * (modulus / rm.modulus)] = c;
  return out;
}

RootMultiset merge(const RootMultiset& a, const RootMultiset& b) {
  long m = lcm_long(a.modulus, b.modulus);
  RootMultiset out = lift(a, m);
  for (const auto& [k, c] : lift(b, m).counts) out.counts[k] += c;
  return out;
}

bool disjoint(const RootMultiset& a, const RootMultiset& b) {
  long m = lcm_long(a.modulus, b.modulus);
  RootMultiset la = lift(a, m), lb = lift(b, m);
  for (const auto& [k, c] : la.counts)
    if (lb.counts.count(k)) return false;
  return true;
}

std::string root_name(long modulus, long k) {
  long g = gcd_long(k, modulus);
  long l = modulus / g, e = k / g;
  if (l == 1) return "1";
  return "zeta_" + std::to_string(l) + "^" + std::to_string(e);
}

ParityProfile parity_profile(const RootMultiset& rm) {
  ParityProfile p;
  for (const auto& [k, c] : rm.counts) {
    p.multiplicity_histogram[c] += 1;
    if (c % 2 != 0) {
      p.all_even = false;
      p.odd_multiplicities.emplace_back(k, c);
    }
  }
  return p;
}

std::optional<long> discrete_log(const Scalar& x, long m) {
  if (m % x.conductor() != 0) return std::nullopt;
  Scalar y = x.embed(m), z = Scalar::zeta(m, 0);
  Scalar step = Scalar::zeta(m, 1);
  for (long c = 0; c < m; ++c) {
    if (y == z) return c;
    z = z * step;
  }
  return std::nullopt;
}

std::optional<CyclotomicCharacter> as_character(const TwistSpec& spec) {
  if (spec.dim() != 1) return std::nullopt;
  long n = spec.field.conductor;
  for (long m : {n, 2 * n}) {
    if (m != n && n % 2 == 0) break;
    CyclotomicCharacter ch{m, {}};
    bool ok = true;
    for (const auto& r : spec.rho) {
      auto c = discrete_log(r(0, 0), m);
      if (!c) {
        ok = false;
        break;
      }
      ch.c.push_back(*c);
    }
    if (ok) return ch;
  }
  return std::nullopt;
}

std::vector<BinomialFactor> binomials_of(const FactoredPoly& f, const TwistSpec& spec,
                                         const CyclotomicCharacter& ch) {
  std::vector<BinomialFactor> out;
  for (const auto& x : f.factors) {
    if (x.exponent == 0) continue;
    if (!x.loop) fail(ErrorCode::unsupported, "factor " + x.label + " is not a loop factor");
    long c = 0, e = 0;
    for (std::size_t j = 0; j < x.loop->size(); ++j) {
      c += (*x.loop)[j] * ch.c[j];
      e += (*x.loop)[j] * spec.epsilon[j];
    }
    if (e == 0) fail(ErrorCode::precondition, "loop " + x.label + " has zero epsilon weight");
    // zeta^c t^e - 1 with e < 0 is a unit times zeta^-c t^-e - 1
    if (e < 0) c = -c, e = -e;
    out.push_back({mod_long(c, ch.modulus), e, x.exponent, x.label});
  }
  return out;
}

bool root_containment(const CanonicalPoly& p, const CanonicalPoly& bound) {
  return divides(radical(p), radical(bound));
}

namespace {

LaurentPoly embedded(const LaurentPoly& p, long big_l) {
  std::vector<Scalar> c;
  for (const auto& x : p.coeffs()) {
    if (big_l % x.conductor() != 0) fail(ErrorCode::field_mismatch, "root field does not contain the coefficients");
    c.push_back(x.embed(big_l));
  }
  return LaurentPoly::from_coeffs(p.valuation(), std::move(c));
}

}  // namespace

long root_multiplicity(const CanonicalPoly& p, long big_l, long k) {
  LaurentPoly q = embedded(p.poly(), big_l);
  Scalar x = Scalar::zeta(big_l, k);
  long mult = 0;
  while (!q.is_zero() && q.eval(x).is_zero()) {
    ++mult;
    q = q.derivative();
  }
  return mult;
}

LocusDescriptor describe_roots(const CanonicalPoly& p, long conductor) {
  LocusDescriptor d;
  d.radical = radical(p);
  long deg = d.radical.degree();
  d.other_roots = deg;
  if (deg == 0) return d;
  long phi_n = euler_phi(conductor);
  // a primitive n-th root has degree phi(lcm(n,N))/phi(N) over Q(zeta_N)
  long bound = 2 * (deg * phi_n) * (deg * phi_n);
  for (long n = 1; n <= bound && d.other_roots > 0; ++n) {
    long big_l = lcm_long(n, conductor);
    if (euler_phi(big_l) > deg * phi_n) continue;
    const auto& phi = cyclotomic_polynomial(n);
    std::vector<Scalar> c;
    for (const auto& z : phi) c.push_back(Scalar(Rational(z)));
    CanonicalPoly g = gcd(d.radical.poly(), LaurentPoly::from_coeffs(0, std::move(c)));
    if (g.degree() == 0) continue;
    UnityRoots u{n, g.degree(), {}, {}};
    if (euler_phi(big_l) <= 64) {
      for (long k = 0; k < n; ++k) {
        if (gcd_long(k, n) != 1) continue;
        long mu = root_multiplicity(p, big_l, k * (big_l / n));
        if (mu > 0) {
          u.exponents.push_back(k);
          u.multiplicities.push_back(mu);
        }
      }
    }
    d.other_roots -= u.count;
    d.roots_of_unity.push_back(std::move(u));
  }
  return d;
}

JumpLociReport jump_loci_report(const CanonicalPoly& delta0, const CanonicalPoly& delta1, std::size_t d, long chi,
                                long conductor) {
  JumpLociReport r;
  r.threshold = static_cast<long>(d) * (chi < 0 ? -chi : chi) + 1;
  r.level1 = describe_roots(delta0 * delta1, conductor);
  r.deep = describe_roots(delta1, conductor);
  return r;
}

namespace {

// Loops of the boundary formula with nonzero exponent, as abelian vectors:
// affine points of multiplicity >= 3, infinity points of multiplicity >= 3,
// l0 and lines with s_tilde != 2.
std::vector<std::vector<long>> boundary_loops(const Arrangement& arr) {
  const std::size_t m = arr.size();
  std::vector<std::vector<long>> loops;
  auto push = [&](std::vector<long> v) {
    for (auto& w : loops) {
      bool same = true, opp = true;
      for (std::size_t j = 0; j < m; ++j) {
        same = same && w[j] == v[j];
        opp = opp && w[j] == -v[j];
      }
      // inverse loops differ by a unit; a1a2a0 and a345 coincide abelianly
      if (same || opp) return;
    }
    loops.push_back(std::move(v));
  };
  ProjectiveCompletion pc = projectivize(arr);
  for (std::size_t i = 0; i < m; ++i) {
    if (pc.s_tilde[i + 1] == 2) continue;
    std::vector<long> v(m, 0);
    v[i] = 1;
    push(v);
  }
  if (pc.s_tilde[0] != 2) push(std::vector<long>(m, -1));
  for (const auto& p : singular_points(arr)) {
    if (p.multiplicity() < 3) continue;
    std::vector<long> v(m, 0);
    for (std::size_t j : p.incident) v[j] = 1;
    push(v);
  }
  for (std::size_t c = 0; c < pc.direction_classes.size(); ++c) {
    if (pc.infinity_multiplicity[c] < 3) continue;
    std::vector<long> v(m, -1);
    for (std::size_t j : pc.direction_classes[c]) v[j] += 1;
    push(v);
  }
  return loops;
}

RootMultiset loop_roots(const std::vector<long>& v, const std::vector<long>& eps, const std::vector<long>& c, long n) {
  long cc = 0, e = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    cc += v[j] * c[j];
    e += v[j] * eps[j];
  }
  if (e == 0) return {n, {{0, 1}}};  // degenerate, never disjoint from t = 1 users
  if (e < 0) cc = -cc, e = -e;
  return roots_of_binomials({{mod_long(cc, n), e, 1, {}}}, n);
}

// First c in lexicographic order over [0,n)^m with pairwise-disjoint loop
// roots. Single-generator loops are checked as soon as they are assigned.
std::optional<std::vector<long>> scan_conductor(const std::vector<std::vector<long>>& loops,
                                                const std::vector<long>& eps, long n, std::size_t& tried) {
  const std::size_t m = eps.size();
  // loop index -> last generator it depends on
  std::vector<std::size_t> ready(loops.size(), 0);
  for (std::size_t l = 0; l < loops.size(); ++l)
    for (std::size_t j = 0; j < m; ++j)
      if (loops[l][j] != 0) ready[l] = j;
  std::vector<long> c(m, 0);
  std::vector<RootMultiset> cache(loops.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    for (long v = 0; v < n; ++v) {
      c[j] = v;
      ++tried;
      bool ok = true;
      for (std::size_t l = 0; l < loops.size() && ok; ++l) {
        if (ready[l] != j) continue;
        cache[l] = loop_roots(loops[l], eps, c, n);
        for (std::size_t o = 0; o < loops.size() && ok; ++o)
          if (o != l && ready[o] < j + (o < l ? 1 : 0)) ok = disjoint(cache[l], cache[o]);
      }
      if (!ok) continue;
      if (j + 1 == m || rec(j + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return c;
  return std::nullopt;
}

TwistSpec character_spec(long n, const std::vector<long>& eps, const std::vector<long>& c) {
  TwistSpec s{FieldConfig{n}, eps, {}};
  for (long x : c) s.rho.push_back(ScalarMatrix::scalar(1, Scalar::zeta(n, x)));
  return s;
}

}  // namespace

FalkCertificate falk_distinguish(const Arrangement& a1, const Arrangement& a2, const FalkSearchOptions& opt) {
  if (opt.epsilon.size() != a1.size() || opt.epsilon.size() != a2.size())
    fail(ErrorCode::shape_mismatch, "epsilon length must match both arrangements");
  auto loops = boundary_loops(a2);
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  FalkCertificate cert;
  cert.epsilon = opt.epsilon;
  std::optional<std::vector<long>> found;
  // conductors are scanned in batches; the smallest successful one wins
  for (long base = 1; base <= opt.max_conductor && !found; base += workers) {
    std::vector<std::future<std::pair<std::optional<std::vector<long>>, std::size_t>>> jobs;
    for (long n = base; n < base + static_cast<long>(workers) && n <= opt.max_conductor; ++n)
      jobs.push_back(std::async(std::launch::async, [&, n] {
        std::size_t tried = 0;
        auto r = scan_conductor(loops, opt.epsilon, n, tried);
        return std::make_pair(r, tried);
      }));
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      auto [r, tried] = jobs[i].get();
      if (found) continue;
      cert.candidates_tried += tried;
      if (r) {
        found = r;
        cert.modulus = base + static_cast<long>(i);
      }
    }
  }
  if (!found) fail(ErrorCode::precondition, "no separating character found below the conductor bound");
  cert.c = *found;
  TwistSpec spec = character_spec(cert.modulus, cert.epsilon, cert.c);
  CyclotomicCharacter ch{cert.modulus, cert.c};
  ClosedForms f1(a1, spec), f2(a2, spec);
  cert.a1_ratio = *f1.boundary_ratio();
  cert.a2_ratio = *f2.boundary_ratio();
  auto b1 = binomials_of(cert.a1_ratio, spec, ch), b2 = binomials_of(cert.a2_ratio, spec, ch);
  cert.a1_roots = roots_of_binomials(b1, cert.modulus);
  cert.a2_roots = roots_of_binomials(b2, cert.modulus);
  cert.a1_profile = parity_profile(cert.a1_roots);
  cert.a2_profile = parity_profile(cert.a2_roots);
  cert.disjoint = true;
  for (std::size_t i = 0; i < b2.size(); ++i)
    for (std::size_t j = i + 1; j < b2.size(); ++j) {
      BinomialFactor x = b2[i], y = b2[j];
      x.mult = y.mult = 1;
      if (!disjoint(roots_of_binomials({x}, cert.modulus), roots_of_binomials({y}, cert.modulus)))
        cert.disjoint = false;
    }
  const auto& h = cert.a2_profile.multiplicity_histogram;
  cert.distinguished = cert.disjoint && cert.a1_profile.all_even && h.count(3) && h.count(1);
  return cert;
}

}  // namespace arrangealex
