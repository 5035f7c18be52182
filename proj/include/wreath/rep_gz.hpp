#pragma once

// G wr Z representations: each lamp cell is a word of the subsidiary
// group's language L_G subset {0,1}* whose first letter is replaced by a
// tagged counterpart (underlined inside the word, A/B/C at the origin and
// lamplighter cells), concatenated over the window [l, r].
//
// ASCII serialization: plain 0/1 -> '0'/'1'; underlined -> 'u'/'U';
// A-tagged -> 'A'/'a'; B-tagged -> 'B'/'b'; C-tagged -> 'C'/'c'.

#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "audit.hpp"
#include "automata.hpp"
#include "bounds.hpp"
#include "wreath_group.hpp"

namespace wreath {

inline SymbolTable gz_alphabet() {
  return SymbolTable({"0", "1", "u0", "u1", "A0", "A1", "B0", "B1", "C0",
                      "C1"},
                     "01uUAaBbCc");
}

namespace gz {

inline bool is_tag(char c) { return c != '0' && c != '1'; }
inline int bit_of(char c) {
  switch (c) {
    case '0': case 'u': case 'A': case 'B': case 'C': return 0;
    case '1': case 'U': case 'a': case 'b': case 'c': return 1;
    default: return -1;
  }
}
// tag kinds: 'u' underline, 'A', 'B', 'C'
inline char tag_kind(char c) {
  switch (c) {
    case 'u': case 'U': return 'u';
    case 'A': case 'a': return 'A';
    case 'B': case 'b': return 'B';
    case 'C': case 'c': return 'C';
    default: return 0;
  }
}
inline char make_tag(char kind, int bit) {
  switch (kind) {
    case 'u': return bit ? 'U' : 'u';
    case 'A': return bit ? 'a' : 'A';
    case 'B': return bit ? 'b' : 'B';
    case 'C': return bit ? 'c' : 'C';
  }
  return bit ? '1' : '0';
}

}  // namespace gz

// A Cayley automatic presentation of the subsidiary group G with
// L_G subset {0,1}*, epsilon not in L_G.
struct GPresentation {
  std::string name;
  std::string identity_word;
  std::vector<std::string> generator_names;   // forward generators only
  std::vector<std::int64_t> generator_values;
  std::vector<bool> self_inverse;
  std::function<std::string(std::int64_t)> encode;
  std::function<std::optional<std::int64_t>(const std::string&)> decode;
  std::function<std::int64_t(std::int64_t, std::int64_t)> mul;
  std::function<std::int64_t(std::int64_t)> inv;
  SyncFsa language;                 // one-tape automaton for L_G
  std::vector<SyncFsa> generator_fsas;  // pair machines over {0,1,#}

  bool in_language(const std::string& w) const {
    return language.run(to_mword(w));
  }
};

// G = Z2 with L_G = {0, 1}; reproduces the Theorem-1 representation up to
// the underline/plain renaming.
inline GPresentation z2_presentation() {
  GPresentation p;
  p.name = "Z2";
  p.identity_word = "0";
  p.generator_names = {"h"};
  p.generator_values = {1};
  p.self_inverse = {true};
  p.encode = [](std::int64_t v) { return std::string(v ? "1" : "0"); };
  p.decode = [](const std::string& w) -> std::optional<std::int64_t> {
    if (w == "0") return 0;
    if (w == "1") return 1;
    return std::nullopt;
  };
  p.mul = [](std::int64_t a, std::int64_t b) { return a ^ b; };
  p.inv = [](std::int64_t a) { return a; };
  {
    FsaBuilder b("Z2:L", SymbolTable({"0", "1"}, "01"), false);
    b.initial("s");
    b.add("s", sym('0'), "acc");
    b.add("s", sym('1'), "acc");
    b.accept("acc");
    p.language = b.build();
  }
  {
    FsaBuilder b("Z2:h", SymbolTable({"0", "1"}, "01"), true);
    b.initial("s");
    b.add("s", pair_sym('0', '1'), "acc");
    b.add("s", pair_sym('1', '0'), "acc");
    b.accept("acc");
    p.generator_fsas.push_back(b.build());
  }
  return p;
}

// G = Z, least-significant-bit-first binary with a leading sign letter:
// first letter 0 means non-negative, 1 means negative; the magnitude word
// encodes n for n >= 0 and -n-1 for n < 0, so the identity word is "0".
inline std::string z_binary_encode(std::int64_t n) {
  std::string w = n < 0 ? "1" : "0";
  std::uint64_t mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1))
                            : static_cast<std::uint64_t>(n);
  while (mag) {
    w += (mag & 1) ? '1' : '0';
    mag >>= 1;
  }
  return w;
}

inline std::optional<std::int64_t> z_binary_decode(const std::string& w) {
  if (w.empty()) return std::nullopt;
  if (w[0] != '0' && w[0] != '1') return std::nullopt;
  if (w.size() > 1 && w.back() != '1') return std::nullopt;
  std::uint64_t mag = 0;
  for (std::size_t i = w.size(); i > 1; --i) {
    char c = w[i - 1];
    if (c != '0' && c != '1') return std::nullopt;
    mag = (mag << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return w[0] == '1' ? -static_cast<std::int64_t>(mag) - 1
                     : static_cast<std::int64_t>(mag);
}

inline GPresentation z_presentation() {
  GPresentation p;
  p.name = "Z";
  p.identity_word = "0";
  p.generator_names = {"g1"};
  p.generator_values = {1};
  p.self_inverse = {false};
  p.encode = z_binary_encode;
  p.decode = z_binary_decode;
  p.mul = [](std::int64_t a, std::int64_t b) { return a + b; };
  p.inv = [](std::int64_t a) { return -a; };
  {
    // length 1, or length >= 2 ending in 1
    FsaBuilder b("Z:L", SymbolTable({"0", "1"}, "01"), false);
    b.initial("s");
    for (char c : {'0', '1'}) b.add("s", sym(c), "one");
    for (char c : {'0', '1'}) b.add("one", sym(c), c == '1' ? "hi" : "lo");
    for (char c : {'0', '1'}) b.add("lo", sym(c), c == '1' ? "hi" : "lo");
    for (char c : {'0', '1'}) b.add("hi", sym(c), c == '1' ? "hi" : "lo");
    b.accept("one");
    b.accept("hi");
    p.language = b.build();
  }
  {
    // increment: sign pair, then carry propagation left-to-right
    FsaBuilder b("Z:g1", SymbolTable({"0", "1"}, "01"), true);
    b.initial("S");
    b.add("S", pair_sym('0', '0'), "inc");
    b.add("S", pair_sym('1', '1'), "dec");
    b.add("S", pair_sym('1', '0'), "cross");
    b.add("inc", pair_sym('1', '0'), "inc");
    b.add("inc", pair_sym('0', '1'), "eqF");
    b.add("inc", pair_sym(kPad, '1'), "end");
    b.add("dec", pair_sym('0', '1'), "dec");
    b.add("dec", pair_sym('1', '0'), "eqF");
    b.add("dec", pair_sym('1', kPad), "end");
    for (std::string q : {"eqF", "eq0", "eq1"}) {
      b.add(q, pair_sym('0', '0'), "eq0");
      b.add(q, pair_sym('1', '1'), "eq1");
    }
    b.accept("eq1");
    b.accept("end");
    b.accept("cross");
    p.generator_fsas.push_back(b.build());
  }
  return p;
}

// ---------------------------------------------------------------------------
// Encoding and decoding.

inline std::string gz_encode(const GPresentation& P, const GzZElement& g) {
  std::int64_t m = 0, n = 0;
  if (!g.lamps.empty()) {
    m = g.lamps.begin()->first;
    n = g.lamps.rbegin()->first;
  }
  std::int64_t l = std::min({m, g.pos, std::int64_t{0}});
  std::int64_t r = std::max({n, g.pos, std::int64_t{0}});
  std::string w;
  for (std::int64_t i = l; i <= r; ++i) {
    std::string cell = P.encode(g.lamp_at(i));
    char kind = 'u';
    if (i == 0 && g.pos == 0)
      kind = 'B';
    else if (i == 0)
      kind = 'A';
    else if (i == g.pos)
      kind = 'C';
    cell[0] = gz::make_tag(kind, cell[0] == '1');
    w += cell;
  }
  return w;
}

inline GzZElement gz_decode(const GPresentation& P, const std::string& w) {
  if (w.empty()) throw ParseError(0, "empty word");
  if (!gz::is_tag(w[0])) throw ParseError(0, "word must start a cell");
  // split into cells at tagged letters
  std::vector<std::pair<char, std::string>> cells;  // (tag kind, value word)
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    int bit = gz::bit_of(c);
    if (bit < 0) throw ParseError(i, "unknown symbol");
    if (gz::is_tag(c))
      cells.push_back({gz::tag_kind(c), std::string(1, bit ? '1' : '0')});
    else
      cells.back().second += c;
  }
  std::ptrdiff_t origin = -1, lamplighter = -1;
  bool has_b = false;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    char kind = cells[ci].first;
    if (kind == 'A' || kind == 'B') {
      if (origin >= 0) throw ParseError(ci, "second origin cell");
      origin = static_cast<std::ptrdiff_t>(ci);
      has_b = kind == 'B';
    } else if (kind == 'C') {
      if (lamplighter >= 0) throw ParseError(ci, "second lamplighter cell");
      lamplighter = static_cast<std::ptrdiff_t>(ci);
    }
  }
  if (origin < 0) throw ParseError(0, "no origin cell");
  if (has_b && lamplighter >= 0)
    throw ParseError(static_cast<std::size_t>(lamplighter),
                     "B-word may not carry a C cell");
  if (!has_b && lamplighter < 0)
    throw ParseError(cells.size() - 1, "A-word needs a C cell");

  GzZElement g;
  g.pos = has_b ? 0 : lamplighter - origin;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    auto val = P.decode(cells[ci].second);
    if (!val) throw ParseError(ci, "cell word outside L_G");
    g.set_lamp(static_cast<std::ptrdiff_t>(ci) - origin, *val);
  }
  // window minimality: end cells are markers or non-identity
  auto end_ok = [&](std::size_t ci) {
    return cells[ci].first != 'u' || cells[ci].second != P.identity_word;
  };
  if (!end_ok(0)) throw ParseError(0, "leading identity cell");
  if (!end_ok(cells.size() - 1))
    throw ParseError(cells.size() - 1, "trailing identity cell");
  return g;
}

inline Representation<GzZElement> gz_z_representation() {
  Representation<GzZElement> rep;
  rep.name = "gz:z";
  auto P = std::make_shared<GPresentation>(z_presentation());
  rep.encode = [P](const GzZElement& g) { return gz_encode(*P, g); };
  rep.decode = [P](const std::string& w) -> std::optional<GzZElement> {
    try {
      return gz_decode(*P, w);
    } catch (const ParseError&) {
      return std::nullopt;
    }
  };
  return rep;
}

inline LLElement gz_to_ll(const GzZElement& g) {
  LLElement out;
  out.pos = g.pos;
  for (const auto& [p, v] : g.lamps) out.set_lamp(p, v & 1);
  return out;
}

inline GzZElement ll_to_gz(const LLElement& g) {
  GzZElement out;
  out.pos = g.pos;
  for (const auto& [p, v] : g.lamps) out.set_lamp(p, v);
  return out;
}

inline Representation<LLElement> gz_z2_representation() {
  Representation<LLElement> rep;
  rep.name = "gz:z2";
  auto P = std::make_shared<GPresentation>(z2_presentation());
  rep.encode = [P](const LLElement& g) { return gz_encode(*P, ll_to_gz(g)); };
  rep.decode = [P](const std::string& w) -> std::optional<LLElement> {
    try {
      return gz_to_ll(gz_decode(*P, w));
    } catch (const ParseError&) {
      return std::nullopt;
    }
  };
  return rep;
}

// Renaming between the gz Z2 instance and the Theorem-1 alphabet: the
// underline is redundant when every cell is a single letter.
inline std::string gz_word_to_ll(const std::string& w) {
  std::string out = w;
  for (char& c : out) {
    if (c == 'u') c = '0';
    if (c == 'U') c = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constants of the lower bound (1/K)|w| - K0/K <= |g|.

struct GzConstants {
  long long K0 = 0;
  std::vector<long long> d;  // per forward generator
  long long K = 0;
  bool d_certified = false;  // empirical max equals the structural bound
};

// Longest run of padded pairs that can end an accepted run; nullopt when a
// pad cycle makes it unbounded.
inline std::optional<long long> max_pad_suffix(const SyncFsa& m) {
  auto is_pad = [](Sym s) {
    return is_pair(s) && (pair_top(s) == kPad || pair_bot(s) == kPad);
  };
  // longest pad-only path from q into an accepting state
  std::map<int, long long> memo;
  std::set<int> onstack;
  std::function<std::optional<long long>(int)> best =
      [&](int q) -> std::optional<long long> {
    auto it = memo.find(q);
    if (it != memo.end()) return it->second;
    if (onstack.count(q)) return std::nullopt;  // cycle
    onstack.insert(q);
    long long r = m.accepting.count(q) ? 0 : -1;
    for (const auto& [key, dests] : m.trans) {
      if (key.first != q || !is_pad(key.second)) continue;
      for (int d : dests) {
        auto sub = best(d);
        if (!sub) {
          onstack.erase(q);
          return std::nullopt;
        }
        if (*sub >= 0) r = std::max(r, *sub + 1);
      }
    }
    onstack.erase(q);
    memo[q] = r;
    return r;
  };
  long long overall = 0;
  for (int q = 0; q < m.num_states; ++q) {
    auto r = best(q);
    if (!r) return std::nullopt;
    overall = std::max(overall, *r);
  }
  return overall;
}

inline GzConstants gz_constants(const GPresentation& P,
                                std::int64_t value_range = 4096) {
  GzConstants c;
  c.K0 = static_cast<long long>(P.identity_word.size());
  c.K = c.K0;
  c.d_certified = true;
  for (std::size_t j = 0; j < P.generator_values.size(); ++j) {
    long long emp = 0;
    for (std::int64_t v = -value_range; v <= value_range; ++v) {
      std::int64_t w = P.mul(v, P.generator_values[j]);
      long long du = static_cast<long long>(P.encode(v).size());
      long long dv = static_cast<long long>(P.encode(w).size());
      emp = std::max(emp, std::llabs(du - dv));
    }
    auto structural = max_pad_suffix(P.generator_fsas[j]);
    if (!structural || *structural != emp) c.d_certified = false;
    c.d.push_back(emp);
    c.K = std::max(c.K, emp);
  }
  return c;
}

template <class Lamp>
BoundsReport gz_bounds_check(const GPresentation& P,
                             const DistanceMap<ZBase, Lamp>& ball,
                             std::optional<std::pair<long long, long long>>
                                 upper_CD = std::nullopt) {
  GzConstants c = gz_constants(P);
  BoundsReport rep;
  rep.group = "gz:" + P.name;
  rep.lambda = {1, c.K};
  rep.mu = {-c.K0, c.K};
  rep.upper_applicable = upper_CD.has_value();
  if (upper_CD) {
    rep.xi = {upper_CD->first + upper_CD->second + 2, 1};
    rep.delta = {-2, 1};
  }
  for (const auto& [g, dist] : ball.entries) {
    GzZElement gz_elt;
    gz_elt.pos = g.pos;
    for (const auto& [p, v] : g.lamps) gz_elt.set_lamp(p, v);
    long long w = static_cast<long long>(gz_encode(P, gz_elt).size());
    long long d = dist;
    ++rep.checked;
    bool ok = w - c.K0 <= c.K * d;  // (1/K)|w| - K0/K <= |g|
    if (ok && upper_CD) {
      long long xi = upper_CD->first + upper_CD->second + 2;
      ok = d <= xi * w - 2;
      if (ok && d == xi * w - 2 && rep.upper_witnesses.size() < 32)
        rep.upper_witnesses.push_back(gz_encode(P, gz_elt));
    }
    if (!ok) rep.violations.push_back({gz_encode(P, gz_elt), w, d});
    if (w - c.K0 == c.K * d && rep.lower_witnesses.size() < 32)
      rep.lower_witnesses.push_back(gz_encode(P, gz_elt));
  }
  return rep;
}

}  // namespace wreath
