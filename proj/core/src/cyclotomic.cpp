#include "arrangealex/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "arrangealex/error.hpp"

namespace arrangealex {

long euler_phi(long n) {
  if (n < 1) fail(ErrorCode::precondition, "phi of non-positive integer");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex phi_mutex;
std::map<long, std::vector<Integer>> phi_cache;

// exact division of integer polynomials, divisor monic
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dn; ++k)
    if (num[k] != 0) fail(ErrorCode::internal, "cyclotomic division not exact");
  return q;
}

const std::vector<Integer>& phi_of(long n) {
  thread_local long last_n = 0;
  thread_local const std::vector<Integer>* last = nullptr;
  if (n != last_n) {
    last = &cyclotomic_polynomial(n);
    last_n = n;
  }
  return *last;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorCode::precondition, "cyclotomic polynomial needs N >= 1");
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
  }
  std::vector<Integer> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(const Rational& v, long conductor)
    : conductor_(conductor), c_(euler_phi(conductor)) {
  c_[0] = v;
}

void Cyclotomic::reduce() {
  const auto& phi = phi_of(conductor_);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (sgn(c_[k]) == 0) continue;
    Rational c = c_[k];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) c_[k - deg + j] -= c * phi[j];
  }
  c_.resize(deg);
}

Cyclotomic Cyclotomic::from_coeffs(long conductor, std::vector<Rational> coeffs) {
  Cyclotomic r;
  r.conductor_ = conductor;
  r.c_ = std::move(coeffs);
  std::size_t deg = euler_phi(conductor);
  if (r.c_.size() < deg) r.c_.resize(deg);
  r.reduce();
  return r;
}

Cyclotomic Cyclotomic::zeta(long conductor, long k) {
  long e = mod_long(k, conductor);
  std::vector<Rational> v(e + 1);
  v[e] = 1;
  return from_coeffs(conductor, std::move(v));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

void align(Cyclotomic& a, Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return;
  if (a.is_rational()) {
    a = Cyclotomic(a.c_[0], b.conductor_);
  } else if (b.is_rational()) {
    b = Cyclotomic(b.c_[0], a.conductor_);
  } else {
    fail(ErrorCode::field_mismatch, "mixing Q(zeta_" + std::to_string(a.conductor_) +
                                        ") and Q(zeta_" + std::to_string(b.conductor_) + ")");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= b.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (c_.size() == 1 && o.c_.size() == 1) {
    c_[0] *= o.c_[0];
    if (conductor_ != o.conductor_ && conductor_ < o.conductor_) conductor_ = o.conductor_;
    return *this;
  }
  if (o.is_rational() ) {
    Rational s = o.c_[0];
    if (conductor_ != o.conductor_ && c_.size() == 1) *this = Cyclotomic(c_[0], o.conductor_);
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (conductor_ != o.conductor_)
    fail(ErrorCode::field_mismatch, "mixing Q(zeta_" + std::to_string(conductor_) +
                                        ") and Q(zeta_" + std::to_string(o.conductor_) + ")");
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  reduce();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  return false;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  bool ra = a.is_rational(), rb = b.is_rational();
  if (ra && rb) return cmp(a.c_[0], b.c_[0]);
  if (ra != rb) return ra ? -1 : 1;
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// p = q*d + r
void divmod(const QPoly& p, const QPoly& d, QPoly& q, QPoly& r) {
  r = p;
  trim(r);
  q.assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Rational(0));
  Rational lead_inv = 1 / d.back();
  while (r.size() >= d.size()) {
    Rational c = r.back() * lead_inv;
    std::size_t shift = r.size() - d.size();
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
    r.pop_back();
    trim(r);
  }
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out = a;
  if (!q.empty() && !b.empty()) {
    if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero cyclotomic element");
  if (is_rational()) {
    Cyclotomic r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  const auto& phi = phi_of(conductor_);
  QPoly r0(phi.begin(), phi.end()), r1 = c_;
  trim(r1);
  QPoly t0, t1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, rem;
    divmod(r0, r1, q, rem);
    QPoly t2 = sub_mul(t0, q, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) fail(ErrorCode::internal, "cyclotomic element not invertible");
  Rational s = 1 / r1[0];
  for (auto& x : t1) x *= s;
  return from_coeffs(conductor_, std::move(t1));
}

Cyclotomic field_inverse(const Cyclotomic& a) { return a.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  Cyclotomic acc(Rational(1), conductor_);
  while (n) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return acc;
}

Cyclotomic Cyclotomic::embed(long m) const {
  if (m % conductor_ != 0) fail(ErrorCode::field_mismatch, "embedding into a non-multiple conductor");
  if (m == conductor_) return *this;
  long step = m / conductor_;
  std::vector<Rational> v((c_.size() - 1) * step + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) v[k * step] = c_[k];
  return from_coeffs(m, std::move(v));
}

std::string to_string(const Cyclotomic& a) {
  if (a.is_rational()) return to_string(a.rational_part());
  std::string out;
  std::string sym = "zeta" + std::to_string(a.conductor());
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const Rational& c = a.coeffs()[k];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = to_string(mag);
    } else {
      if (mag != 1) term = to_string(mag) + "*";
      term += sym;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string FieldConfig::name() const {
  if (conductor == 1) return "Q";
  return "Q(zeta" + std::to_string(conductor) + ")";
}

}  // namespace arrangealex
