#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arrangealex {

// Freely reduced word in a_1..a_m. A letter is +(g+1) or -(g+1) for the
// 0-based generator g.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(std::size_t g, int exp = 1);
  static FreeWord from_letters(const std::vector<int>& letters);

  const std::vector<int>& letters() const { return l_; }
  std::size_t length() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  FreeWord inverse() const;
  // u^-1 * this * u
  FreeWord conjugated_by(const FreeWord& u) const;
  // exponent sum per generator
  std::vector<long> abelianization(std::size_t m) const;

  FreeWord& operator*=(const FreeWord& o);
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (a.l_.size() != b.l_.size()) return a.l_.size() <=> b.l_.size();
    return a.l_ <=> b.l_;
  }

  static int letter_generator(int letter) { return (letter > 0 ? letter : -letter) - 1; }

 private:
  std::vector<int> l_;
};

FreeWord commutator(const FreeWord& x, const FreeWord& y);  // x y x^-1 y^-1

// "a3^-1 a1 a3"; empty word prints as "1".
std::string to_string(const FreeWord& w);
// Compact letters a, b, c, ... (m <= 26) with conjugates rendered as
// "c^{bd^-1}"; falls back to a1, a2, ... for larger m.
std::string pretty(const FreeWord& w, std::size_t m);
// Accepts the to_string form, and the compact letter form for m <= 26
// ("c^{bd^-1}", "b^-1 c b", "bcd").
FreeWord parse_word(std::string_view text, std::size_t m);

}  // namespace arrangealex
