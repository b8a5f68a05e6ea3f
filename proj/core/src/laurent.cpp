#include "arrangealex/laurent.hpp"

#include <cctype>
#include <sstream>

#include "arrangealex/error.hpp"

namespace arrangealex {

LaurentPoly::LaurentPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, long e) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.v_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long valuation, std::vector<Scalar> coeffs) {
  LaurentPoly p;
  p.v_ = valuation;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    v_ += static_cast<long>(lead);
  }
  if (c_.empty()) v_ = 0;
}

Scalar LaurentPoly::coeff(long e) const {
  if (c_.empty() || e < v_ || e > top()) return Scalar(0);
  return c_[e - v_];
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.v_ += k;
  return p;
}

LaurentPoly LaurentPoly::derivative() const {
  std::vector<Scalar> d(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) d[k] = c_[k] * Scalar(v_ + static_cast<long>(k));
  return from_coeffs(v_ - 1, std::move(d));
}

Scalar LaurentPoly::eval(const Scalar& x) const {
  if (c_.empty()) return Scalar(0);
  Scalar acc = c_.back();
  for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + c_[k];
  return acc * x.pow(v_);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(v_, o.v_), hi = std::max(top(), o.top());
  std::vector<Scalar> out(hi - lo + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) out[v_ - lo + k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) out[o.v_ - lo + k] += o.c_[k];
  v_ = lo;
  c_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) return *this = LaurentPoly();
  for (auto& x : c_) x *= s;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly::from_coeffs(a.v_ + b.v_, std::move(out));
}

int compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  if (a.v_ != b.v_) return a.v_ < b.v_ ? -1 : 1;
  for (std::size_t k = a.c_.size(); k-- > 0;) {
    int c = compare(a.c_[k], b.c_[k]);
    if (c) return c;
  }
  return 0;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly acc(1), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

LaurentDivision divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorCode::division_by_zero, "Laurent division by zero");
  if (a.is_zero()) return {};
  std::vector<Scalar> r = a.coeffs();
  const auto& d = b.coeffs();
  if (r.size() < d.size()) return {LaurentPoly(), a};
  Scalar lead_inv = d.back().inverse();
  std::vector<Scalar> q(r.size() - d.size() + 1);
  for (std::size_t k = r.size(); k-- >= d.size();) {
    if (r[k].is_zero()) continue;
    Scalar c = r[k] * lead_inv;
    std::size_t shift = k + 1 - d.size();
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (!d[j].is_zero()) r[shift + j] -= c * d[j];
  }
  r.resize(d.size() - 1);
  return {LaurentPoly::from_coeffs(a.valuation() - b.valuation(), std::move(q)),
          LaurentPoly::from_coeffs(a.valuation(), std::move(r))};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) return std::nullopt;
  return qr.quotient;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).remainder.is_zero();
}

CanonicalPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::precondition, "normalization of the zero polynomial");
  Scalar inv = p.leading().inverse();
  LaurentPoly q = p.shifted(-p.valuation());
  q *= inv;
  return CanonicalPoly(std::move(q));
}

CanonicalPoly operator*(const CanonicalPoly& a, const CanonicalPoly& b) {
  return CanonicalPoly(a.p_ * b.p_);
}

CanonicalPoly CanonicalPoly::pow(unsigned long e) const { return CanonicalPoly(p_.pow(e)); }

CanonicalPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) fail(ErrorCode::precondition, "gcd of two zero polynomials");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  LaurentPoly a = normalize(p).poly(), b = normalize(q).poly();
  if (a.spread() < b.spread()) std::swap(a, b);
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? r : normalize(r).poly();
  }
  return normalize(a);
}

CanonicalPoly lcm(const CanonicalPoly& p, const CanonicalPoly& q) {
  return *divide_exact(p * q, gcd(p, q));
}

bool divides(const CanonicalPoly& b, const CanonicalPoly& a) { return divides(b.poly(), a.poly()); }

std::optional<CanonicalPoly> divide_exact(const CanonicalPoly& a, const CanonicalPoly& b) {
  auto q = divide_exact(a.poly(), b.poly());
  if (!q) return std::nullopt;
  return normalize(*q);
}

CanonicalPoly radical(const CanonicalPoly& p) {
  if (p.is_one()) return p;
  CanonicalPoly g = gcd(p.poly(), p.poly().derivative());
  return *divide_exact(p, g);
}

namespace {

std::string monomial_text(long e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long e = p.top(); e >= p.valuation(); --e) {
    Scalar c = p.coeff(e);
    if (c.is_zero()) continue;
    std::string mono = monomial_text(e);
    bool neg = false;
    std::string coef;
    if (c.is_rational()) {
      Rational q = c.rational_part();
      neg = sgn(q) < 0;
      Rational mag = abs(q);
      if (mag != 1 || mono.empty()) coef = to_string(mag);
    } else {
      coef = "(" + to_string(c) + ")";
    }
    std::string term = coef;
    if (!coef.empty() && !mono.empty()) term += "*";
    term += mono;
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string to_json_pairs(const LaurentPoly& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (long e = p.valuation(); !p.is_zero() && e <= p.top(); ++e) {
    Scalar c = p.coeff(e);
    if (c.is_zero()) continue;
    if (!first) os << ",";
    first = false;
    os << "[" << e << ",\"" << to_string(c) << "\"]";
  }
  os << "]";
  return os.str();
}

namespace {

// Recursive descent over a blank-free string.
struct Parser {
  std::string s;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error, what + " at offset " + std::to_string(pos) + " in '" + s + "'");
  }
  bool at_end() const { return pos >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool eat(std::string_view w) {
    if (s.compare(pos, w.size(), w) != 0) return false;
    pos += w.size();
    return true;
  }

  Integer digits() {
    std::size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (start == pos) error("expected digits");
    return Integer(s.substr(start, pos - start));
  }

  long signed_int() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Integer v = digits();
    if (!v.fits_slong_p()) error("exponent too large");
    return neg ? -v.get_si() : v.get_si();
  }

  // rational | zetaN[^k] | (sum)
  LaurentPoly atom() {
    if (eat('(')) {
      LaurentPoly v = sum();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (eat("zeta")) {
      long n = digits().get_si();
      long k = 1;
      if (eat('^')) k = signed_int();
      return LaurentPoly(Scalar::zeta(n, k));
    }
    if (eat('t')) {
      long k = 1;
      if (eat('^')) k = signed_int();
      return LaurentPoly::t(k);
    }
    if (eat('i')) return LaurentPoly(Scalar::zeta(4, 1));
    Integer num = digits();
    Integer den = 1;
    if (eat('/')) den = digits();
    return LaurentPoly(Scalar(make_rational(num, den)));
  }

  LaurentPoly product() {
    LaurentPoly v = atom();
    while (true) {
      if (eat('*')) {
        v = v * atom();
      } else if (peek() == 't' || peek() == '(' || peek() == 'z') {
        v = v * atom();
      } else {
        return v;
      }
    }
  }

  LaurentPoly sum() {
    LaurentPoly v;
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!eat('+') && !first) {
        return v;
      }
      if (at_end() || peek() == ')') error("dangling sign");
      LaurentPoly term = product();
      v += neg ? -term : term;
      first = false;
    }
  }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  Parser p;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) p.s.push_back(c);
  if (p.s.empty()) p.error("empty polynomial");
  LaurentPoly v = p.sum();
  if (!p.at_end()) p.error("trailing input");
  return v;
}

Scalar parse_scalar(std::string_view text) {
  LaurentPoly v = parse_laurent(text);
  if (v.is_zero()) return Scalar(0);
  if (!v.is_monomial() || v.valuation() != 0) fail(ErrorCode::parse_error, "expected a field element, got a polynomial in t");
  return v.leading();
}

}  // namespace arrangealex
