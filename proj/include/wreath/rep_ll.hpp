#pragma once

// Lamplighter representation of Z2 wr Z over the eight-symbol alphabet
// {0,1,A0,A1,B0,B1,C0,C1}, its multiplier automata, the closed word-length
// formula, normal forms and the word-length bounds check.
//
// ASCII serialization: 0,1 plain; A0->'A', A1->'a', B0->'B', B1->'b',
// C0->'C', C1->'c'.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "audit.hpp"
#include "automata.hpp"
#include "bounds.hpp"
#include "wreath_group.hpp"

namespace wreath {

inline SymbolTable ll_alphabet() {
  return SymbolTable({"0", "1", "A0", "A1", "B0", "B1", "C0", "C1"},
                     "01AaBbCc");
}

// Window [l, r] an encoding must cover, with the support extremes m <= n.
struct SpanFrame {
  std::int64_t m = 0, n = 0, l = 0, r = 0;
};

inline SpanFrame ll_span(const LLElement& g) {
  SpanFrame f;
  if (!g.lamps.empty()) {
    f.m = g.lamps.begin()->first;
    f.n = g.lamps.rbegin()->first;
  }
  f.l = std::min({f.m, g.pos, std::int64_t{0}});
  f.r = std::max({f.n, g.pos, std::int64_t{0}});
  return f;
}

inline std::string ll_encode(const LLElement& g) {
  SpanFrame f = ll_span(g);
  std::string w;
  w.reserve(static_cast<std::size_t>(f.r - f.l + 1));
  for (std::int64_t i = f.l; i <= f.r; ++i) {
    bool lit = g.lamp_at(i) != 0;
    char c;
    if (i == 0 && g.pos == 0)
      c = lit ? 'b' : 'B';
    else if (i == 0)
      c = lit ? 'a' : 'A';
    else if (i == g.pos)
      c = lit ? 'c' : 'C';
    else
      c = lit ? '1' : '0';
    w += c;
  }
  return w;
}

inline LLElement ll_decode(const std::string& w) {
  if (w.empty()) throw ParseError(0, "empty word");
  std::ptrdiff_t origin = -1, lamplighter = -1;
  bool has_b = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    switch (c) {
      case '0':
      case '1':
        break;
      case 'A':
      case 'a':
      case 'B':
      case 'b':
        if (origin >= 0) throw ParseError(i, "second origin marker");
        origin = static_cast<std::ptrdiff_t>(i);
        has_b = (c == 'B' || c == 'b');
        break;
      case 'C':
      case 'c':
        if (lamplighter >= 0)
          throw ParseError(i, "second lamplighter marker");
        lamplighter = static_cast<std::ptrdiff_t>(i);
        break;
      default:
        throw ParseError(i, "unknown symbol");
    }
  }
  if (origin < 0) throw ParseError(0, "no origin marker");
  if (has_b && lamplighter >= 0)
    throw ParseError(static_cast<std::size_t>(lamplighter),
                     "B-word may not carry a C marker");
  if (!has_b && lamplighter < 0)
    throw ParseError(w.size() - 1, "A-word needs a C marker");
  if (w.front() == '0') throw ParseError(0, "leading 0");
  if (w.back() == '0') throw ParseError(w.size() - 1, "trailing 0");

  LLElement g;
  g.pos = has_b ? 0 : lamplighter - origin;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    bool lit = c == '1' || c == 'a' || c == 'b' || c == 'c';
    if (lit) g.set_lamp(static_cast<std::ptrdiff_t>(i) - origin, 1);
  }
  return g;
}

// Word length over {a, a^-1, h}: #supp f plus the shorter of the two
// sweep orders.
inline long long ll_length(const LLElement& g) {
  SpanFrame f = ll_span(g);
  long long supp = static_cast<long long>(g.lamps.size());
  long long left = std::max(-f.m, std::int64_t{0});
  long long right = std::max(f.n, std::int64_t{0});
  long long z = g.pos;
  long long right_first = 2 * left + right + std::llabs(z - right);
  long long left_first = 2 * right + left + std::llabs(z + left);
  return supp + std::min(right_first, left_first);
}

// ---------------------------------------------------------------------------
// Normal forms: a_k = a^k h a^-k; tokens are "a", "a-1", "h".

using GenString = std::vector<std::string>;

inline void append_lamp_setter(GenString& out, std::int64_t k) {
  for (std::int64_t i = 0; i < k; ++i) out.push_back("a");
  for (std::int64_t i = 0; i > k; --i) out.push_back("a-1");
  out.push_back("h");
  for (std::int64_t i = 0; i < k; ++i) out.push_back("a-1");
  for (std::int64_t i = 0; i > k; --i) out.push_back("a");
}

inline std::pair<GenString, GenString> ll_normal_form(const LLElement& g) {
  std::vector<std::int64_t> pos_supp, neg_supp;
  for (const auto& [p, v] : g.lamps)
    (p >= 0 ? pos_supp : neg_supp).push_back(p);
  std::sort(neg_supp.rbegin(), neg_supp.rend());  // -j1 > -j2 > ...
  auto tail = [&](GenString& out) {
    for (std::int64_t i = 0; i < g.pos; ++i) out.push_back("a");
    for (std::int64_t i = 0; i > g.pos; --i) out.push_back("a-1");
  };
  GenString left, right;
  for (std::int64_t k : pos_supp) append_lamp_setter(left, k);
  for (std::int64_t k : neg_supp) append_lamp_setter(left, k);
  tail(left);
  for (std::int64_t k : neg_supp) append_lamp_setter(right, k);
  for (std::int64_t k : pos_supp) append_lamp_setter(right, k);
  tail(right);
  return {left, right};
}

inline LLElement ll_eval(const GenString& tokens) {
  LLElement a, h, g;
  a.pos = 1;
  h.set_lamp(0, 1);
  for (const auto& t : tokens) {
    if (t == "a")
      g = wreath_mul(g, a);
    else if (t == "a-1")
      g = wreath_mul(g, wreath_inv(a));
    else if (t == "h")
      g = wreath_mul(g, h);
    else
      throw std::invalid_argument("ll_eval: unknown token " + t);
  }
  return g;
}

inline std::size_t freely_reduced_length(const GenString& tokens) {
  std::vector<std::string> stack;
  auto cancels = [](const std::string& x, const std::string& y) {
    return (x == "a" && y == "a-1") || (x == "a-1" && y == "a") ||
           (x == "h" && y == "h");
  };
  for (const auto& t : tokens) {
    if (!stack.empty() && cancels(stack.back(), t))
      stack.pop_back();
    else
      stack.push_back(t);
  }
  return stack.size();
}

// ---------------------------------------------------------------------------
// The representation language L: one B-word or one A plus one C, no leading
// or trailing 0.

inline SyncFsa ll_language_fsa() {
  FsaBuilder b("ll:L", ll_alphabet(), /*pairs=*/false);
  b.initial("start");
  auto plain = [&](const std::string& from, const std::string& toz,
                   const std::string& ton) {
    b.add(from, sym('0'), toz);
    b.add(from, sym('1'), ton);
  };
  // marker-progress component: N (none) -> A / C / AC / B
  b.add("start", sym('1'), "N_n");
  for (char c : std::string("Aa")) b.add("start", sym(c), "A_n");
  for (char c : std::string("Bb")) b.add("start", sym(c), "B_n");
  for (char c : std::string("Cc")) b.add("start", sym(c), "C_n");
  for (std::string M : {"N", "A", "C", "AC", "B"}) {
    plain(M + "_n", M + "_z", M + "_n");
    plain(M + "_z", M + "_z", M + "_n");
  }
  for (std::string s : {"_n", "_z"}) {
    for (char c : std::string("Aa")) b.add("N" + s, sym(c), "A_n");
    for (char c : std::string("Cc")) b.add("N" + s, sym(c), "C_n");
    for (char c : std::string("Bb")) b.add("N" + s, sym(c), "B_n");
    for (char c : std::string("Cc")) b.add("A" + s, sym(c), "AC_n");
    for (char c : std::string("Aa")) b.add("C" + s, sym(c), "AC_n");
  }
  b.accept("AC_n");
  b.accept("B_n");
  return b.build();
}

// ---------------------------------------------------------------------------
// Multiplier automata.

inline SyncFsa ll_mult_fsa_h() {
  FsaBuilder b("ll:h", ll_alphabet(), /*pairs=*/true);
  b.initial("start");
  auto eq = [&](const std::string& from, const std::string& toz,
                const std::string& ton) {
    b.add(from, pair_sym('0', '0'), toz);
    b.add(from, pair_sym('1', '1'), ton);
  };
  b.add("start", pair_sym('1', '1'), "q00_n");
  b.add("start", pair_sym('A', 'A'), "q10_n");
  b.add("start", pair_sym('a', 'a'), "q10_n");
  b.add("start", pair_sym('C', 'c'), "q01_n");
  b.add("start", pair_sym('c', 'C'), "q01_n");
  b.add("start", pair_sym('B', 'b'), "q11_n");
  b.add("start", pair_sym('b', 'B'), "q11_n");
  for (std::string AF : {"q00", "q10", "q01", "q11"}) {
    eq(AF + "_n", AF + "_z", AF + "_n");
    eq(AF + "_z", AF + "_z", AF + "_n");
  }
  for (std::string s : {"_n", "_z"}) {
    b.add("q00" + s, pair_sym('A', 'A'), "q10_n");
    b.add("q00" + s, pair_sym('a', 'a'), "q10_n");
    b.add("q00" + s, pair_sym('C', 'c'), "q01_n");
    b.add("q00" + s, pair_sym('c', 'C'), "q01_n");
    b.add("q00" + s, pair_sym('B', 'b'), "q11_n");
    b.add("q00" + s, pair_sym('b', 'B'), "q11_n");
    b.add("q01" + s, pair_sym('A', 'A'), "q11_n");
    b.add("q01" + s, pair_sym('a', 'a'), "q11_n");
    b.add("q10" + s, pair_sym('C', 'c'), "q11_n");
    b.add("q10" + s, pair_sym('c', 'C'), "q11_n");
  }
  b.accept("q11_n");
  return b.build();
}

// Right multiplication by a: the C mark moves one position right, with the
// window growing at the right end (z = r) or shrinking at the left end
// (z < min{m,0}); the shrunk case reads the two words shifted by one.
inline SyncFsa ll_mult_fsa_a() {
  FsaBuilder b("ll:a", ll_alphabet(), /*pairs=*/true);
  b.initial("start");
  const Sym e00 = pair_sym('0', '0'), e11 = pair_sym('1', '1');

  auto marker_rows = [&](const std::string& from) {
    b.add(from, pair_sym('A', 'A'), "qA");
    b.add(from, pair_sym('a', 'a'), "qA");
    b.add(from, pair_sym('B', 'A'), "qACu");
    b.add(from, pair_sym('b', 'a'), "qACu");
    b.add(from, pair_sym('c', '1'), "qCuA");
    if (from != "start")
      b.add(from, pair_sym('C', '0'), "qCuA");
    // a leading C0 means l = z < min{m,0}: that is the shifted branch
  };
  b.add("start", e11, "q0");
  marker_rows("start");
  b.add("start", pair_sym('C', 'C'), "sP0");
  b.add("start", pair_sym('C', 'c'), "sP1");
  b.add("start", pair_sym('C', 'B'), "sA0");
  b.add("start", pair_sym('C', 'b'), "sA1");
  b.add("q0", e00, "q0");
  b.add("q0", e11, "q0");
  marker_rows("q0");

  b.add("qA", e00, "qA");
  b.add("qA", e11, "qA");
  b.add("qA", pair_sym('C', '0'), "qACu");
  b.add("qA", pair_sym('c', '1'), "qACu");

  b.add("qACu", pair_sym('0', 'C'), "qDone_z");
  b.add("qACu", pair_sym('1', 'c'), "qDone_n");
  b.add("qACu", pair_sym(kPad, 'C'), "qEnd");

  b.add("qCuA", pair_sym('0', 'C'), "qCsA");
  b.add("qCuA", pair_sym('1', 'c'), "qCsA");
  b.add("qCuA", pair_sym('A', 'B'), "qDone_n");
  b.add("qCuA", pair_sym('a', 'b'), "qDone_n");

  b.add("qCsA", e00, "qCsA");
  b.add("qCsA", e11, "qCsA");
  b.add("qCsA", pair_sym('A', 'A'), "qDone_n");
  b.add("qCsA", pair_sym('a', 'a'), "qDone_n");

  b.add("qDone_n", e00, "qDone_z");
  b.add("qDone_n", e11, "qDone_n");
  b.add("qDone_z", e00, "qDone_z");
  b.add("qDone_z", e11, "qDone_n");

  // Shifted branch: v[k] = u[k+1]; state remembers the expected next
  // u-symbol and whether v has shown its origin marker yet.
  auto store = [&](const std::string& from, char expect,
                   const std::string& flag) {
    b.add(from, pair_sym(expect, '0'), "sX0_" + flag);
    b.add(from, pair_sym(expect, '1'), "sX1_" + flag);
    if (flag == "n") {
      b.add(from, pair_sym(expect, 'A'), "sXA_y");
      b.add(from, pair_sym(expect, 'a'), "sXa_y");
    }
  };
  store("sP0", '0', "n");
  store("sP1", '1', "n");
  b.add("sA0", pair_sym('A', '0'), "sB0");
  b.add("sA0", pair_sym('A', '1'), "sB1");
  b.add("sA0", pair_sym('A', kPad), "qEnd");
  b.add("sA1", pair_sym('a', '0'), "sB0");
  b.add("sA1", pair_sym('a', '1'), "sB1");
  b.add("sA1", pair_sym('a', kPad), "qEnd");
  for (std::string flag : {"n", "y"}) {
    const char expects[4] = {'0', '1', 'A', 'a'};
    const char* names[4] = {"sX0_", "sX1_", "sXA_", "sXa_"};
    for (int i = 0; i < 4; ++i) {
      std::string from = names[i] + flag;
      store(from, expects[i], flag);
      if (flag == "y" && expects[i] != '0')
        b.add(from, pair_sym(expects[i], kPad), "qEnd");
    }
  }
  b.add("sB0", pair_sym('0', '0'), "sB0");
  b.add("sB0", pair_sym('0', '1'), "sB1");
  b.add("sB1", pair_sym('1', '0'), "sB0");
  b.add("sB1", pair_sym('1', '1'), "sB1");
  b.add("sB1", pair_sym('1', kPad), "qEnd");

  b.accept("qDone_n");
  b.accept("qEnd");
  return b.build();
}

inline SyncFsa ll_mult_fsa(const std::string& gen) {
  if (gen == "h") return ll_mult_fsa_h();
  if (gen == "a") return ll_mult_fsa_a();
  if (gen == "a-1") return fsa_transpose(ll_mult_fsa_a(), "ll:a-1");
  throw std::invalid_argument("ll_mult_fsa: unknown generator " + gen);
}

// ---------------------------------------------------------------------------

inline Representation<LLElement> ll_representation() {
  Representation<LLElement> rep;
  rep.name = "ll";
  rep.encode = [](const LLElement& g) { return ll_encode(g); };
  rep.decode = [](const std::string& w) -> std::optional<LLElement> {
    try {
      return ll_decode(w);
    } catch (const ParseError&) {
      return std::nullopt;
    }
  };
  return rep;
}

// Theorem-1 window bounds |w| - 1 <= |g| <= 3|w| - 2 over a ball.
inline BoundsReport ll_bounds_check(const DistanceMap<ZBase, Z2Lamp>& ball) {
  BoundsReport rep;
  rep.group = "ll";
  rep.lambda = {1, 1};
  rep.mu = {-1, 1};
  rep.xi = {3, 1};
  rep.delta = {-2, 1};
  for (const auto& [g, dist] : ball.entries) {
    long long w = static_cast<long long>(ll_encode(g).size());
    long long d = dist;
    ++rep.checked;
    if (!(w - 1 <= d && d <= 3 * w - 2))
      rep.violations.push_back({ll_encode(g), w, d});
    if (d == w - 1 && rep.lower_witnesses.size() < 32)
      rep.lower_witnesses.push_back(ll_encode(g));
    if (d == 3 * w - 2 && rep.upper_witnesses.size() < 32)
      rep.upper_witnesses.push_back(ll_encode(g));
  }
  return rep;
}

}  // namespace wreath
