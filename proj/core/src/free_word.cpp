#include "arrangealex/free_word.hpp"

#include <cctype>

#include "arrangealex/error.hpp"

namespace arrangealex {

FreeWord FreeWord::generator(std::size_t g, int exp) {
  FreeWord w;
  int l = static_cast<int>(g) + 1;
  w.l_.push_back(exp < 0 ? -l : l);
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<int>& letters) {
  FreeWord w;
  for (int x : letters) {
    if (x == 0) fail(ErrorCode::precondition, "letter 0 is not a generator");
    if (!w.l_.empty() && w.l_.back() == -x) {
      w.l_.pop_back();
    } else {
      w.l_.push_back(x);
    }
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.l_.reserve(l_.size());
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) w.l_.push_back(-*it);
  return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const { return u.inverse() * *this * u; }

std::vector<long> FreeWord::abelianization(std::size_t m) const {
  std::vector<long> v(m, 0);
  for (int x : l_) {
    std::size_t g = letter_generator(x);
    if (g >= m) fail(ErrorCode::precondition, "word uses a generator beyond a" + std::to_string(m));
    v[g] += x > 0 ? 1 : -1;
  }
  return v;
}

FreeWord& FreeWord::operator*=(const FreeWord& o) {
  std::size_t k = 0;
  while (k < o.l_.size() && !l_.empty() && l_.back() == -o.l_[k]) {
    l_.pop_back();
    ++k;
  }
  l_.insert(l_.end(), o.l_.begin() + k, o.l_.end());
  return *this;
}

FreeWord commutator(const FreeWord& x, const FreeWord& y) { return x * y * x.inverse() * y.inverse(); }

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "a" + std::to_string(FreeWord::letter_generator(x) + 1);
    if (x < 0) out += "^-1";
  }
  return out;
}

static std::string compact_letters(const FreeWord& w, std::size_t m) {
  std::string out;
  for (int x : w.letters()) {
    int g = FreeWord::letter_generator(x);
    if (m <= 26) {
      out += static_cast<char>('a' + g);
    } else {
      out += (out.empty() ? "a" : " a") + std::to_string(g + 1);
    }
    if (x < 0) out += "^-1";
  }
  return out;
}

std::string pretty(const FreeWord& w, std::size_t m) {
  if (w.empty()) return "1";
  const auto& l = w.letters();
  std::size_t n = l.size();
  if (n % 2 == 1 && l[n / 2] > 0) {
    std::size_t k = n / 2;
    bool conj = true;
    for (std::size_t i = 0; i < k && conj; ++i) conj = l[i] == -l[n - 1 - i];
    if (conj && k > 0) {
      FreeWord u = FreeWord::from_letters(std::vector<int>(l.begin() + k + 1, l.end()));
      return compact_letters(FreeWord::generator(l[k] - 1), m) + "^{" + compact_letters(u, m) + "}";
    }
  }
  return compact_letters(w, m);
}

namespace {

struct WordParser {
  std::string s;
  std::size_t pos = 0;
  std::size_t m;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error, what + " at offset " + std::to_string(pos) + " in word '" + s + "'");
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  FreeWord atom() {
    if (peek() == '(') {
      ++pos;
      FreeWord w = word(')');
      if (peek() != ')') error("expected ')'");
      ++pos;
      return w;
    }
    char c = peek();
    if (!std::islower(static_cast<unsigned char>(c))) error("expected a generator");
    ++pos;
    std::size_t g;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (c != 'a') error("indexed generators are written a<k>");
      std::size_t start = pos;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      g = std::stoul(s.substr(start, pos - start));
      if (g == 0) error("generators are numbered from 1");
      --g;
    } else {
      g = static_cast<std::size_t>(c - 'a');
    }
    if (g >= m) error("generator out of range");
    return FreeWord::generator(g);
  }

  FreeWord factor() {
    FreeWord w = atom();
    while (peek() == '^') {
      ++pos;
      if (s.compare(pos, 2, "-1") == 0) {
        pos += 2;
        w = w.inverse();
      } else if (peek() == '{') {
        ++pos;
        FreeWord u = word('}');
        if (peek() != '}') error("expected '}'");
        ++pos;
        w = w.conjugated_by(u);
      } else {
        error("expected -1 or {word}");
      }
    }
    return w;
  }

  FreeWord word(char close) {
    FreeWord w;
    while (pos < s.size() && peek() != close) w *= factor();
    return w;
  }
};

}  // namespace

FreeWord parse_word(std::string_view text, std::size_t m) {
  WordParser p;
  p.m = m;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) p.s.push_back(c);
  if (p.s == "1" || p.s.empty()) return FreeWord();
  FreeWord w = p.word('\0');
  if (p.pos != p.s.size()) p.error("trailing input");
  return w;
}

}  // namespace arrangealex
