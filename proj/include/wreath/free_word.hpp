#pragma once

// Freely reduced words over the two generators of F2.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

// Letters of F2: a, a^-1, b, b^-1. inverse(x) == x ^ 1.
enum F2Letter : std::uint8_t { LA = 0, LAi = 1, LB = 2, LBi = 3 };

inline F2Letter f2_inverse(F2Letter x) {
  return static_cast<F2Letter>(x ^ 1u);
}

struct FreeWord {
  std::vector<std::uint8_t> letters;  // invariant: freely reduced

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  bool operator==(const FreeWord& o) const { return letters == o.letters; }
  bool operator!=(const FreeWord& o) const { return letters != o.letters; }
  bool operator<(const FreeWord& o) const {
    if (letters.size() != o.letters.size())
      return letters.size() < o.letters.size();
    return letters < o.letters;  // shortlex
  }
};

// Cancels adjacent inverse pairs until a fixpoint; the unique reduced form.
inline FreeWord free_reduce(const std::vector<std::uint8_t>& raw) {
  FreeWord w;
  w.letters.reserve(raw.size());
  for (std::uint8_t x : raw) {
    if (x > 3) throw std::invalid_argument("free_reduce: letter out of range");
    if (!w.letters.empty() && (w.letters.back() ^ 1u) == x)
      w.letters.pop_back();
    else
      w.letters.push_back(x);
  }
  return w;
}

inline FreeWord f2_mul(const FreeWord& x, const FreeWord& y) {
  std::vector<std::uint8_t> raw = x.letters;
  raw.insert(raw.end(), y.letters.begin(), y.letters.end());
  return free_reduce(raw);
}

inline FreeWord f2_inv(const FreeWord& x) {
  FreeWord r;
  r.letters.reserve(x.letters.size());
  for (auto it = x.letters.rbegin(); it != x.letters.rend(); ++it)
    r.letters.push_back(*it ^ 1u);
  return r;  // reversal of a reduced word is reduced
}

inline FreeWord f2_letter_word(F2Letter l) {
  FreeWord w;
  w.letters.push_back(l);
  return w;
}

// Literal syntax: `e` is the identity, otherwise letters a/b with an
// optional `-1` suffix marking the inverse, e.g. `ab-1a`.
inline std::string f2_to_string(const FreeWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::uint8_t x : w.letters) {
    s += (x < 2 ? 'a' : 'b');
    if (x & 1u) s += "-1";
  }
  return s;
}

inline FreeWord f2_parse(const std::string& s) {
  if (s == "e") return FreeWord{};
  std::vector<std::uint8_t> raw;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::uint8_t base;
    if (c == 'a')
      base = LA;
    else if (c == 'b')
      base = LB;
    else
      throw std::invalid_argument("f2_parse: bad letter at index " +
                                  std::to_string(i));
    ++i;
    if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '1') {
      base |= 1u;
      i += 2;
    }
    raw.push_back(base);
  }
  FreeWord w = free_reduce(raw);
  if (w.letters != raw)
    throw std::invalid_argument("f2_parse: word is not freely reduced");
  return w;
}

// Syllable decomposition a^{k1} b^{k2} a^{k3} ...; the first syllable is the
// a-power (possibly zero when the word starts with b).
struct F2Syllable {
  bool a_axis;          // true: power of a, false: power of b
  std::int64_t power;   // nonzero except possibly a leading zero a-power
};

inline std::vector<F2Syllable> f2_syllables(const FreeWord& w) {
  std::vector<F2Syllable> out;
  out.push_back({true, 0});
  for (std::uint8_t x : w.letters) {
    bool a_axis = x < 2;
    std::int64_t step = (x & 1u) ? -1 : +1;
    if (out.back().a_axis == a_axis)
      out.back().power += step;
    else
      out.push_back({a_axis, step});
  }
  return out;
}

}  // namespace wreath
