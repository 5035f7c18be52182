#pragma once

// Multiplier automata for G wr Z, materialized from structured product
// states: a cell-level skeleton (the Theorem-1 marker cases lifted to
// variable-length cells), the L_G acceptor run over cell contents, and a
// bounded delay buffer for the window-shift and padded-cell cases.

#include <sstream>
#include <string>
#include <vector>

#include "rep_gz.hpp"

namespace wreath {
namespace gzm {

inline std::string join_set(const std::set<int>& s) {
  std::string out;
  for (int q : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(q);
  }
  return out.empty() ? "-" : out;
}

inline std::set<int> split_set(const std::string& s) {
  std::set<int> out;
  if (s == "-") return out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.insert(std::stoi(tok));
  return out;
}

inline std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '|') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class NextFn, class AccFn>
SyncFsa materialize_fsa(const std::string& id, SymbolTable alpha,
                        const std::string& start,
                        const std::vector<Sym>& symbols, NextFn next,
                        AccFn acc) {
  FsaBuilder b(id, std::move(alpha), /*pairs=*/true);
  b.initial(start);
  std::set<std::string> seen{start};
  std::vector<std::string> work{start};
  while (!work.empty()) {
    std::string s = work.back();
    work.pop_back();
    if (acc(s)) b.accept(s);
    for (Sym sy : symbols) {
      for (const std::string& t : next(s, sy)) {
        b.add(s, sy, t);
        if (seen.insert(t).second) work.push_back(t);
      }
    }
  }
  return b.build();
}

inline std::vector<Sym> gz_pair_symbols() {
  std::string cs = gz_alphabet().chars + kPad;
  std::vector<Sym> out;
  for (char a : cs)
    for (char b : cs)
      if (a != kPad || b != kPad) out.push_back(pair_sym(a, b));
  return out;
}

// Identity-word prefix tracking: -1 once mismatched, else matched length.
inline int id_start(const std::string& idw, int bit) {
  return idw[0] == (bit ? '1' : '0') ? 1 : -1;
}
inline int id_step(const std::string& idw, int i, char plain) {
  if (i < 0 || i >= static_cast<int>(idw.size())) return -1;
  return idw[i] == plain ? i + 1 : -1;
}
inline bool id_full(const std::string& idw, int i) {
  return i == static_cast<int>(idw.size());
}

// ---------------------------------------------------------------------------
// The shift machine (gen = a): the C tag moves one cell to the right.
//
// Cell-level skeleton states: 0 nothing seen, 1 A passed, 2 u-C passed with
// v-C due in the next cell, 3 u-C passed with the origin still ahead,
// 4 both C cells passed with the origin still ahead, 5 all markers passed.

inline int skel_step(int k, char cell) {
  switch (cell) {
    case 'E': return (k == 0 || k == 1 || k == 4 || k == 5) ? k : -1;
    case 'A': return k == 0 ? 1 : (k == 4 ? 5 : -1);
    case 'X': return k == 0 ? 2 : -1;  // (B,A)
    case 'U': return k == 1 ? 2 : (k == 0 ? 3 : -1);
    case 'V': return k == 2 ? 5 : (k == 3 ? 4 : -1);
    case 'W': return k == 3 ? 5 : -1;  // (A,B)
    default: return -1;
  }
}

inline bool cell_start_valid(int k, char cell) {
  switch (cell) {
    case 'E': return k == 0 || k == 1 || k == 4 || k == 5;
    case 'A': return k == 0 || k == 4;
    case 'X': return k == 0;
    case 'U': return k == 0 || k == 1;
    case 'V': return k == 2 || k == 3;
    case 'W': return k == 3;
    default: return false;
  }
}

// Classifies an aligned tag pair into a cell kind; bits must agree.
inline char classify_cell(char x, char y) {
  if (gz::bit_of(x) != gz::bit_of(y)) return 0;
  char tx = gz::tag_kind(x), ty = gz::tag_kind(y);
  if (tx == 'u' && ty == 'u') return 'E';
  if (tx == 'A' && ty == 'A') return 'A';
  if (tx == 'B' && ty == 'A') return 'X';
  if (tx == 'C' && ty == 'u') return 'U';
  if (tx == 'u' && ty == 'C') return 'V';
  if (tx == 'A' && ty == 'B') return 'W';
  return 0;
}

inline SyncFsa gz_shift_fsa(const GPresentation& P) {
  const std::string idw = P.identity_word;
  const int K0 = static_cast<int>(idw.size());
  const SyncFsa& L = P.language;

  auto lstart = [&](int bit) {
    return L.step({L.initial}, sym(bit ? '1' : '0'));
  };
  auto lacc = [&](const std::set<int>& qs) { return L.accepts_states(qs); };

  // state encodings:
  //   St
  //   AL|skel|cell|dfa|idx|first
  //   TC|k
  //   SH|k|buf|vq|vidx|vkind|vA|vend   (only when K0 > 1)
  //   SD|buf|vq|vidx|vkind|vA|vend
  auto enc_al = [](int k, char c, const std::set<int>& q, int i, bool f) {
    return "AL|" + std::to_string(k) + "|" + std::string(1, c) + "|" +
           join_set(q) + "|" + std::to_string(i) + "|" + (f ? "1" : "0");
  };
  auto enc_sd = [](const std::string& mode, int k, const std::string& buf,
                   const std::set<int>& vq, int vi, char vk, bool vA,
                   bool vend) {
    return mode + "|" + std::to_string(k) + "|" + buf + "|" + join_set(vq) +
           "|" + std::to_string(vi) + "|" + std::string(1, vk) + "|" +
           (vA ? "1" : "0") + (vend ? "|1" : "|0");
  };

  auto next = [&, idw, K0](const std::string& s,
                           Sym sy) -> std::vector<std::string> {
    char x = pair_top(sy), y = pair_bot(sy);
    std::vector<std::string> out;
    auto fields = split_fields(s);
    const std::string& mode = fields[0];

    // starts a fresh aligned cell from skeleton k; pushes resulting states
    auto start_cell = [&](int k, bool first) {
      if (x == kPad) {
        // trailing C-tagged identity cell on the v side
        if (k == 2 && gz::tag_kind(y) == 'C' &&
            gz::bit_of(y) == (idw[0] == '1'))
          out.push_back("TC|1");
        return;
      }
      if (y == kPad) return;
      char c = classify_cell(x, y);
      if (c && cell_start_valid(k, c)) {
        int bit = gz::bit_of(x);
        out.push_back(enc_al(k, c, lstart(bit), id_start(idw, bit), first));
      }
      if (first && gz::tag_kind(x) == 'C' &&
          gz::bit_of(x) == (idw[0] == '1') &&
          (gz::tag_kind(y) == 'C' || gz::tag_kind(y) == 'B')) {
        // shifted branch: u's leading cell is the dropped C identity cell
        int vbit = gz::bit_of(y);
        char expect =
            gz::make_tag(gz::tag_kind(y) == 'B' ? 'A' : 'u', vbit);
        std::set<int> vq = lstart(vbit);
        if (!vq.empty()) {
          std::string st =
              enc_sd(K0 == 1 ? "SD" : "SH", 1, std::string(1, expect), vq,
                     id_start(idw, vbit), 'M', gz::tag_kind(y) == 'B',
                     false);
          out.push_back(st);
        }
      }
    };

    if (mode == "St") {
      start_cell(0, true);
      return out;
    }

    if (mode == "AL") {
      int k = std::stoi(fields[1]);
      char c = fields[2][0];
      std::set<int> q = split_set(fields[3]);
      int i = std::stoi(fields[4]);
      bool f = fields[5] == "1";
      if (x != kPad && y != kPad && !gz::is_tag(x) && !gz::is_tag(y)) {
        if (x != y) return out;
        std::set<int> q2 = L.step(q, sym(x));
        if (q2.empty()) return out;
        out.push_back(enc_al(k, c, q2, id_step(idw, i, x), f));
        return out;
      }
      // current cell ends here
      if (!lacc(q)) return out;
      if (f && (c == 'E' || c == 'U') && id_full(idw, i)) return out;
      int k2 = skel_step(k, c);
      if (k2 < 0) return out;
      start_cell(k2, false);
      return out;
    }

    if (mode == "TC") {
      int k = std::stoi(fields[1]);
      if (k < K0 && x == kPad && !gz::is_tag(y) && y != kPad &&
          y == idw[k])
        out.push_back("TC|" + std::to_string(k + 1));
      return out;
    }

    if (mode == "SH" || mode == "SD") {
      int k = std::stoi(fields[1]);
      std::string buf = fields[2];
      std::set<int> vq = split_set(fields[3]);
      int vi = std::stoi(fields[4]);
      char vk = fields[5][0];
      bool vA = fields[6] == "1";
      bool vend = fields[7] == "1";

      // u-side expectation
      if (mode == "SH") {
        if (x != idw[k]) return out;
      } else {
        if (buf.empty() || x != buf[0]) return out;
        buf.erase(buf.begin());
      }
      // v side
      if (y == kPad) {
        if (!vend) {
          if (!lacc(vq) || !vA) return out;
          if (vk == 'E' && id_full(idw, vi)) return out;
          vend = true;
        }
      } else if (vend) {
        return out;
      } else if (!gz::is_tag(y)) {
        vq = L.step(vq, sym(y));
        if (vq.empty()) return out;
        vi = id_step(idw, vi, y);
        if (mode == "SD") buf += y;
      } else {
        if (!lacc(vq)) return out;
        char ty = gz::tag_kind(y);
        if (ty == 'A') {
          if (vA) return out;
          vA = true;
          vk = 'M';
        } else if (ty == 'u') {
          vk = 'E';
        } else {
          return out;
        }
        int bit = gz::bit_of(y);
        vq = lstart(bit);
        if (vq.empty()) return out;
        vi = id_start(idw, bit);
        if (mode == "SD") buf += y;
      }
      int k2 = mode == "SH" ? k + 1 : k;
      std::string m2 = (mode == "SH" && k2 == K0) ? "SD" : mode;
      out.push_back(enc_sd(m2, k2, buf, vq, vi, vk, vA, vend));
      return out;
    }
    return out;
  };

  auto acc = [&, idw, K0](const std::string& s) -> bool {
    auto fields = split_fields(s);
    if (fields[0] == "AL") {
      int k = std::stoi(fields[1]);
      char c = fields[2][0];
      std::set<int> q = split_set(fields[3]);
      int i = std::stoi(fields[4]);
      if (!L.accepts_states(q)) return false;
      if ((c == 'E' || c == 'V') && id_full(idw, i)) return false;
      bool f = fields[5] == "1";
      if (f && c == 'U' && id_full(idw, i)) return false;
      return skel_step(k, c) == 5;
    }
    if (fields[0] == "TC") return std::stoi(fields[1]) == K0;
    if (fields[0] == "SD")
      return fields[2].empty() && fields[7] == "1";
    return false;
  };

  return materialize_fsa("gz:" + P.name + ":a", gz_alphabet(), "St",
                         gz_pair_symbols(), next, acc);
}

// ---------------------------------------------------------------------------
// Lamp-generator machines: the two words agree cell for cell except at the
// lamplighter (or B) cell, where the subsidiary generator automaton runs on
// the padded pair of cell contents; after a length change the tail is
// checked through a bounded delay buffer.

inline SyncFsa gz_lamp_fsa(const GPresentation& P, std::size_t j) {
  const std::string idw = P.identity_word;
  const SyncFsa& L = P.language;
  const SyncFsa& G = P.generator_fsas[j];

  auto lstart = [&](int bit) {
    return L.step({L.initial}, sym(bit ? '1' : '0'));
  };
  auto lacc = [&](const std::set<int>& qs) { return L.accepts_states(qs); };
  auto gstep = [&](const std::set<int>& qs, char a, char b) {
    return G.step(qs, pair_sym(a, b));
  };
  auto gacc = [&](const std::set<int>& qs) { return G.accepts_states(qs); };
  auto bitc = [](char c) { return gz::bit_of(c) ? '1' : '0'; };

  // state encodings:
  //   St
  //   P|kind|q|i|first|A|C|B          equal cells
  //   G2|gq|A|B                      both C cells streaning
  //   GU|gq|A|B|buf|q|i|k|uend       u's C cell ended first
  //   GV|gq|A|B|buf|q|i|k|vend       v's C cell ended first
  //   PO|buf|q|i|k|A|B|uend          tail with u ahead
  //   PV|buf|q|i|k|A|B|vend          tail with v ahead
  auto enc_p = [](char kind, const std::set<int>& q, int i, bool f, bool A,
                  bool C, bool B) {
    return std::string("P|") + kind + "|" + join_set(q) + "|" +
           std::to_string(i) + "|" + (f ? "1" : "0") + "|" + (A ? "1" : "0") +
           "|" + (C ? "1" : "0") + "|" + (B ? "1" : "0");
  };
  auto enc_g = [](const std::string& m, const std::set<int>& gq, bool A,
                  bool B, const std::string& rest = "") {
    return m + "|" + join_set(gq) + "|" + (A ? "1" : "0") + "|" +
           (B ? "1" : "0") + rest;
  };
  auto enc_tail = [](const std::string& m, const std::string& buf,
                     const std::set<int>& q, int i, char k, bool A, bool B,
                     bool end) {
    return m + "|" + buf + "|" + join_set(q) + "|" + std::to_string(i) + "|" +
           std::string(1, k) + "|" + (A ? "1" : "0") + "|" + (B ? "1" : "0") +
           "|" + (end ? "1" : "0");
  };

  auto next = [&, idw](const std::string& s,
                       Sym sy) -> std::vector<std::string> {
    char x = pair_top(sy), y = pair_bot(sy);
    std::vector<std::string> out;
    auto fields = split_fields(s);
    const std::string& mode = fields[0];

    // starts a new equal cell or the G cell from the "equal" region
    auto start_cell = [&](bool first, bool A, bool C, bool B) {
      if (x == kPad || y == kPad) return;
      if (!gz::is_tag(x) || !gz::is_tag(y)) return;
      char tx = gz::tag_kind(x), ty = gz::tag_kind(y);
      if (tx == 'u' && ty == 'u' && x == y) {
        int bit = gz::bit_of(x);
        out.push_back(
            enc_p('E', lstart(bit), id_start(idw, bit), first, A, C, B));
      } else if (tx == 'A' && ty == 'A' && x == y && !A && !B) {
        int bit = gz::bit_of(x);
        out.push_back(
            enc_p('M', lstart(bit), id_start(idw, bit), first, true, C, B));
      } else if (tx == 'C' && ty == 'C' && !C && !B) {
        auto gq = gstep({G.initial}, bitc(x), bitc(y));
        if (!gq.empty()) out.push_back(enc_g("G2", gq, A, false));
      } else if (tx == 'B' && ty == 'B' && !A && !C && !B) {
        auto gq = gstep({G.initial}, bitc(x), bitc(y));
        if (!gq.empty()) out.push_back(enc_g("G2", gq, false, true));
      }
    };

    if (mode == "St") {
      start_cell(true, false, false, false);
      return out;
    }

    if (mode == "P") {
      char kind = fields[1][0];
      std::set<int> q = split_set(fields[2]);
      int i = std::stoi(fields[3]);
      bool f = fields[4] == "1", A = fields[5] == "1", C = fields[6] == "1",
           B = fields[7] == "1";
      if (x != kPad && y != kPad && !gz::is_tag(x) && !gz::is_tag(y)) {
        if (x != y) return out;
        std::set<int> q2 = L.step(q, sym(x));
        if (q2.empty()) return out;
        out.push_back(enc_p(kind, q2, id_step(idw, i, x), f, A, C, B));
        return out;
      }
      if (!lacc(q)) return out;
      if (f && kind == 'E' && id_full(idw, i)) return out;
      start_cell(false, A, C, B);
      return out;
    }

    if (mode == "G2") {
      std::set<int> gq = split_set(fields[1]);
      bool A = fields[2] == "1", B = fields[3] == "1";
      bool xtag = x != kPad && gz::is_tag(x);
      bool ytag = y != kPad && gz::is_tag(y);
      if (!xtag && !ytag) {
        if (x == kPad && y == kPad) return out;
        auto gq2 = gstep(gq, x, y);
        if (gq2.empty()) return out;
        if (x == kPad)  // u ends at its C cell; v's C cell runs out the word
          out.push_back(enc_g("GU", gq2, A, B, "|-|-|0|E|1"));
        else if (y == kPad)
          out.push_back(enc_g("GV", gq2, A, B, "|-|-|0|E|1"));
        else
          out.push_back(enc_g("G2", gq2, A, B));
        return out;
      }
      if (xtag && ytag) {
        // both cells end; this pair starts an equal tail cell
        if (!gacc(gq)) return out;
        start_cell(false, A, true, B);
        return out;
      }
      if (xtag) {
        // u's cell ended; buffer u while the v cell keeps going
        if (y == kPad) return out;
        auto gq2 = gstep(gq, kPad, y);
        if (gq2.empty()) return out;
        char tx = gz::tag_kind(x);
        bool A2 = A;
        if (tx == 'A') {
          if (A || B) return out;
          A2 = true;
        } else if (tx != 'u') {
          return out;
        }
        int bit = gz::bit_of(x);
        out.push_back(enc_g("GU", gq2, A2, B,
                            "|" + std::string(1, x) + "|" +
                                join_set(lstart(bit)) + "|" +
                                std::to_string(id_start(idw, bit)) + "|" +
                                std::string(1, tx == 'u' ? 'E' : 'M') +
                                "|0"));
        return out;
      }
      // v's cell ended first
      if (x == kPad) return out;
      auto gq2 = gstep(gq, x, kPad);
      if (gq2.empty()) return out;
      char ty = gz::tag_kind(y);
      bool A2 = A;
      if (ty == 'A') {
        if (A || B) return out;
        A2 = true;
      } else if (ty != 'u') {
        return out;
      }
      int bit = gz::bit_of(y);
      out.push_back(enc_g("GV", gq2, A2, B,
                          "|" + std::string(1, y) + "|" +
                              join_set(lstart(bit)) + "|" +
                              std::to_string(id_start(idw, bit)) + "|" +
                              std::string(1, ty == 'u' ? 'E' : 'M') + "|0"));
      return out;
    }

    if (mode == "GU" || mode == "GV") {
      bool u_ahead = mode == "GU";
      std::set<int> gq = split_set(fields[1]);
      bool A = fields[2] == "1", B = fields[3] == "1";
      std::string buf = fields[4] == "-" ? "" : fields[4];
      std::set<int> q = split_set(fields[5]);
      int i = std::stoi(fields[6]);
      char k = fields[7][0];
      bool done = fields[8] == "1";  // the ahead word has ended
      char lead = u_ahead ? x : y;   // symbol of the side that is ahead
      char lag = u_ahead ? y : x;    // symbol of the side inside its C cell
      // the lagging side is still inside its C cell
      if (lag != kPad && !gz::is_tag(lag)) {
        auto gq2 = u_ahead ? gstep(gq, kPad, lag) : gstep(gq, lag, kPad);
        if (gq2.empty()) return out;
        // ahead side advances into its tail cells
        bool A2 = A;
        std::set<int> q2 = q;
        int i2 = i;
        char k2 = k;
        bool done2 = done;
        std::string buf2 = buf;
        if (lead == kPad) {
          if (!done) {
            if (buf.empty()) return out;  // ahead side cannot end mid-cell
            if (!lacc(q)) return out;
            if (k == 'E' && id_full(idw, i)) return out;
            done2 = true;
          }
        } else if (done) {
          return out;
        } else if (!gz::is_tag(lead)) {
          q2 = L.step(q, sym(lead));
          if (q2.empty()) return out;
          i2 = id_step(idw, i, lead);
          buf2 += lead;
        } else {
          if (!lacc(q)) return out;
          char t = gz::tag_kind(lead);
          if (t == 'A') {
            if (A || B) return out;
            A2 = true;
            k2 = 'M';
          } else if (t == 'u') {
            k2 = 'E';
          } else {
            return out;
          }
          int bit = gz::bit_of(lead);
          q2 = lstart(bit);
          i2 = id_start(idw, bit);
          buf2 += lead;
        }
        out.push_back(enc_g(mode, gq2, A2, B,
                            "|" + (buf2.empty() ? "-" : buf2) + "|" +
                                join_set(q2) + "|" + std::to_string(i2) +
                                "|" + std::string(1, k2) + "|" +
                                (done2 ? "1" : "0")));
        return out;
      }
      // the lagging C cell ends: the generator automaton must accept and
      // the lagging side starts replaying the buffer
      if (!gacc(gq)) return out;
      if (buf.empty() || lag != buf[0]) {
        // the lagging side ends together with its C cell
        if (lag == kPad && buf.empty() && done) return out;  // dead end
        return out;
      }
      std::string buf2 = buf.substr(1);
      bool A2 = A;
      std::set<int> q2 = q;
      int i2 = i;
      char k2 = k;
      bool done2 = done;
      if (lead == kPad) {
        if (!done) {
          if (!lacc(q)) return out;
          if (k == 'E' && id_full(idw, i)) return out;
          done2 = true;
        }
      } else if (done) {
        return out;
      } else if (!gz::is_tag(lead)) {
        q2 = L.step(q, sym(lead));
        if (q2.empty()) return out;
        i2 = id_step(idw, i, lead);
        buf2 += lead;
      } else {
        if (!lacc(q)) return out;
        char t = gz::tag_kind(lead);
        if (t == 'A') {
          if (A || B) return out;
          A2 = true;
          k2 = 'M';
        } else if (t == 'u') {
          k2 = 'E';
        } else {
          return out;
        }
        int bit = gz::bit_of(lead);
        q2 = lstart(bit);
        i2 = id_start(idw, bit);
        buf2 += lead;
      }
      out.push_back(enc_tail(u_ahead ? "PO" : "PV",
                             buf2.empty() ? "-" : buf2, q2, i2, k2, A2, B,
                             done2));
      return out;
    }

    if (mode == "PO" || mode == "PV") {
      bool u_ahead = mode == "PO";
      std::string buf = fields[1] == "-" ? "" : fields[1];
      std::set<int> q = split_set(fields[2]);
      int i = std::stoi(fields[3]);
      char k = fields[4][0];
      bool A = fields[5] == "1", B = fields[6] == "1";
      bool done = fields[7] == "1";
      char lead = u_ahead ? x : y;
      char lag = u_ahead ? y : x;
      if (buf.empty() || lag != buf[0]) return out;
      std::string buf2 = buf.substr(1);
      bool A2 = A;
      std::set<int> q2 = q;
      int i2 = i;
      char k2 = k;
      bool done2 = done;
      if (lead == kPad) {
        if (!done) {
          if (!lacc(q)) return out;
          if (k == 'E' && id_full(idw, i)) return out;
          done2 = true;
        }
      } else if (done) {
        return out;
      } else if (!gz::is_tag(lead)) {
        q2 = L.step(q, sym(lead));
        if (q2.empty()) return out;
        i2 = id_step(idw, i, lead);
        buf2 += lead;
      } else {
        if (!lacc(q)) return out;
        char t = gz::tag_kind(lead);
        if (t == 'A') {
          if (A || B) return out;
          A2 = true;
          k2 = 'M';
        } else if (t == 'u') {
          k2 = 'E';
        } else {
          return out;
        }
        int bit = gz::bit_of(lead);
        q2 = lstart(bit);
        i2 = id_start(idw, bit);
        buf2 += lead;
      }
      out.push_back(enc_tail(mode, buf2.empty() ? "-" : buf2, q2, i2, k2,
                             A2, B, done2));
      return out;
    }
    return out;
  };

  auto acc = [&, idw](const std::string& s) -> bool {
    auto fields = split_fields(s);
    if (fields[0] == "P") {
      char kind = fields[1][0];
      std::set<int> q = split_set(fields[2]);
      int i = std::stoi(fields[3]);
      bool A = fields[5] == "1", C = fields[6] == "1", B = fields[7] == "1";
      if (!L.accepts_states(q)) return false;
      if (kind == 'E' && id_full(idw, i)) return false;
      return (A && C) || B;
    }
    if (fields[0] == "G2") {
      std::set<int> gq = split_set(fields[1]);
      bool A = fields[2] == "1", B = fields[3] == "1";
      return G.accepts_states(gq) && (A || B);
    }
    if (fields[0] == "GU" || fields[0] == "GV") {
      std::set<int> gq = split_set(fields[1]);
      bool A = fields[2] == "1", B = fields[3] == "1";
      return fields[4] == "-" && fields[8] == "1" &&
             G.accepts_states(gq) && (A || B);
    }
    if (fields[0] == "PO" || fields[0] == "PV") {
      bool A = fields[5] == "1", B = fields[6] == "1";
      return fields[1] == "-" && fields[7] == "1" && (A || B);
    }
    return false;
  };

  return materialize_fsa("gz:" + P.name + ":" + P.generator_names[j],
                         gz_alphabet(), "St", gz_pair_symbols(), next, acc);
}

}  // namespace gzm

// gen is "a", "a-1", a presentation generator name, or name + "-1".
inline SyncFsa gz_mult_fsa(const GPresentation& P, const std::string& gen) {
  if (gen == "a") return gzm::gz_shift_fsa(P);
  if (gen == "a-1")
    return fsa_transpose(gzm::gz_shift_fsa(P), "gz:" + P.name + ":a-1");
  for (std::size_t j = 0; j < P.generator_names.size(); ++j) {
    if (gen == P.generator_names[j]) return gzm::gz_lamp_fsa(P, j);
    if (gen == P.generator_names[j] + "-1" && !P.self_inverse[j])
      return fsa_transpose(gzm::gz_lamp_fsa(P, j),
                           "gz:" + P.name + ":" + gen);
  }
  throw std::invalid_argument("gz_mult_fsa: unknown generator " + gen);
}

}  // namespace wreath
