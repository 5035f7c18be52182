#pragma once

// Machine models and the convolution algebra: synchronous two-tape finite
// automata, pushdown automata, one-way (non-nested) stack automata, plus
// language enumeration over machine configurations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

// Machine symbols: plain symbols are chars, two-tape symbols are packed
// pairs. '#' serializes the padding symbol.
using Sym = std::uint16_t;
inline constexpr char kPad = '#';

inline Sym sym(char c) { return static_cast<unsigned char>(c); }
inline Sym pair_sym(char a, char b) {
  return static_cast<Sym>((static_cast<unsigned char>(a) << 8) |
                          static_cast<unsigned char>(b));
}
inline bool is_pair(Sym s) { return s >= 256; }
inline char pair_top(Sym s) { return static_cast<char>(s >> 8); }
inline char pair_bot(Sym s) { return static_cast<char>(s & 0xff); }

inline std::string sym_to_string(Sym s) {
  if (!is_pair(s)) return std::string(1, static_cast<char>(s));
  return {pair_top(s), pair_bot(s)};
}

using MWord = std::vector<Sym>;

inline MWord to_mword(const std::string& s) {
  MWord w;
  w.reserve(s.size());
  for (char c : s) w.push_back(sym(c));
  return w;
}

// ---------------------------------------------------------------------------
// Symbol tables.

struct SymbolTable {
  std::vector<std::string> names;
  std::string chars;  // distinct one-character serializations

  SymbolTable() = default;
  SymbolTable(std::vector<std::string> ns, std::string cs)
      : names(std::move(ns)), chars(std::move(cs)) {
    if (names.size() != chars.size())
      throw std::invalid_argument("SymbolTable: names/chars size mismatch");
    std::set<char> seen;
    for (char c : chars) {
      if (c == kPad)
        throw std::invalid_argument("SymbolTable: '#' is reserved as padding");
      if (!seen.insert(c).second)
        throw std::invalid_argument("SymbolTable: duplicate ASCII code");
    }
  }

  bool contains(char c) const {
    return chars.find(c) != std::string::npos;
  }
};

// ---------------------------------------------------------------------------
// Convolution of two words (left-aligned, '#' pads the shorter suffix).

struct Conv {
  std::string top, bottom;

  std::size_t size() const { return std::max(top.size(), bottom.size()); }
  Sym at(std::size_t k) const {
    char a = k < top.size() ? top[k] : kPad;
    char b = k < bottom.size() ? bottom[k] : kPad;
    return pair_sym(a, b);
  }
  MWord to_mword() const {
    MWord w;
    w.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) w.push_back(at(k));
    return w;
  }
  // Two aligned rows padded with '#'.
  std::string pretty() const {
    std::string t = top, b = bottom;
    t.resize(size(), kPad);
    b.resize(size(), kPad);
    return t + "\n" + b;
  }
};

inline Conv convolve(const std::string& u, const std::string& v) {
  return Conv{u, v};
}

// Recovers (u, v) from a pair-symbol word; rejects malformed padding.
inline std::optional<std::pair<std::string, std::string>> deconvolve(
    const MWord& w) {
  std::string u, v;
  bool u_done = false, v_done = false;
  for (Sym s : w) {
    if (!is_pair(s)) return std::nullopt;
    char a = pair_top(s), b = pair_bot(s);
    if (a == kPad && b == kPad) return std::nullopt;
    if (a == kPad)
      u_done = true;
    else if (u_done)
      return std::nullopt;  // padding must be a suffix
    else
      u += a;
    if (b == kPad)
      v_done = true;
    else if (v_done)
      return std::nullopt;
    else
      v += b;
    if (u_done && v_done) return std::nullopt;  // (#,#) pair impossible
  }
  return std::make_pair(u, v);
}

// ---------------------------------------------------------------------------
// Run bounds and outcomes.

struct RunBounds {
  int max_silent = 1000;          // silent steps between consumptions
  int stack_slack = 16;           // max stack height = 10*|input| + slack
  std::size_t max_height(std::size_t input_len) const {
    return 10 * input_len + static_cast<std::size_t>(stack_slack);
  }
};

enum class RunOutcome { Accepted, Rejected, ResourceCap };

struct EnumCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Synchronous (multi-tape capable) finite automaton.

struct SyncFsa {
  std::string id;
  SymbolTable alphabet;           // base symbols; pair machines pair them
  bool pair_alphabet = true;
  int num_states = 0;
  int initial = 0;
  std::set<int> accepting;
  std::map<std::pair<int, Sym>, std::vector<int>> trans;

  void check_symbol(Sym s) const {
    auto ok = [&](char c) { return c == kPad || alphabet.contains(c); };
    if (is_pair(s)) {
      if (!pair_alphabet || !ok(pair_top(s)) || !ok(pair_bot(s)))
        throw std::invalid_argument(id + ": unknown symbol " +
                                    sym_to_string(s));
    } else {
      if (pair_alphabet || !alphabet.contains(static_cast<char>(s)))
        throw std::invalid_argument(id + ": unknown symbol " +
                                    sym_to_string(s));
    }
  }

  std::set<int> step(const std::set<int>& from, Sym s) const {
    std::set<int> next;
    for (int q : from) {
      auto it = trans.find({q, s});
      if (it == trans.end()) continue;
      next.insert(it->second.begin(), it->second.end());
    }
    return next;
  }

  bool accepts_states(const std::set<int>& qs) const {
    for (int q : qs)
      if (accepting.count(q)) return true;
    return false;
  }

  bool run(const MWord& w) const {
    for (Sym s : w) check_symbol(s);
    std::set<int> cur{initial};
    for (Sym s : w) {
      cur = step(cur, s);
      if (cur.empty()) return false;
    }
    return accepts_states(cur);
  }
};

inline bool fsa_run(const SyncFsa& m, const Conv& w) {
  return m.run(w.to_mword());
}

// Incremental builder with named states.
struct FsaBuilder {
  SyncFsa m;
  std::map<std::string, int> names;

  explicit FsaBuilder(std::string id, SymbolTable alpha, bool pairs = true) {
    m.id = std::move(id);
    m.alphabet = std::move(alpha);
    m.pair_alphabet = pairs;
  }
  int state(const std::string& name) {
    auto it = names.find(name);
    if (it != names.end()) return it->second;
    int q = m.num_states++;
    names.emplace(name, q);
    return q;
  }
  void initial(const std::string& name) { m.initial = state(name); }
  void accept(const std::string& name) { m.accepting.insert(state(name)); }
  void add(const std::string& from, Sym s, const std::string& to) {
    m.trans[{state(from), s}].push_back(state(to));
  }
  SyncFsa build() {
    for (auto& [k, v] : m.trans) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return m;
  }
};

// Swaps the two tapes of every transition symbol (relation converse).
inline SyncFsa fsa_transpose(const SyncFsa& m, const std::string& new_id) {
  SyncFsa t = m;
  t.id = new_id;
  t.trans.clear();
  for (const auto& [key, dests] : m.trans) {
    Sym s = key.second;
    Sym flipped = is_pair(s) ? pair_sym(pair_bot(s), pair_top(s)) : s;
    auto& v = t.trans[{key.first, flipped}];
    v.insert(v.end(), dests.begin(), dests.end());
  }
  for (auto& [k, v] : t.trans) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Pushdown automaton. Acceptance is by final state with input exhausted.

struct PdaRule {
  int from = 0;
  Sym input = 0;       // 0 = silent
  char top = 0;        // 0 = applicable only on empty stack, else pops `top`
  int to = 0;
  std::string push;    // written bottom-to-top
};

struct Pda {
  std::string id;
  SymbolTable alphabet;
  bool pair_alphabet = false;
  std::string stack_alphabet;
  int num_states = 0;
  int initial = 0;
  std::set<int> accepting;
  std::vector<PdaRule> rules;
  bool deterministic = false;

  // Structural check of the deterministic flag: at most one applicable rule
  // per (state, lookahead, top) and no silent/consuming conflict.
  void validate_deterministic() const {
    if (!deterministic) return;
    for (std::size_t i = 0; i < rules.size(); ++i)
      for (std::size_t j = i + 1; j < rules.size(); ++j) {
        const auto& a = rules[i];
        const auto& b = rules[j];
        if (a.from != b.from || a.top != b.top) continue;
        if (a.input == b.input)
          throw std::invalid_argument(id + ": deterministic flag violated");
        if (a.input == 0 || b.input == 0)
          throw std::invalid_argument(id +
                                      ": silent/consuming conflict");
      }
  }
};

struct PdaBuilder {
  Pda m;
  std::map<std::string, int> names;

  explicit PdaBuilder(std::string id, SymbolTable alpha, bool pairs,
                      std::string stack_alpha) {
    m.id = std::move(id);
    m.alphabet = std::move(alpha);
    m.pair_alphabet = pairs;
    m.stack_alphabet = std::move(stack_alpha);
  }
  int state(const std::string& name) {
    auto it = names.find(name);
    if (it != names.end()) return it->second;
    int q = m.num_states++;
    names.emplace(name, q);
    return q;
  }
  void initial(const std::string& name) { m.initial = state(name); }
  void accept(const std::string& name) { m.accepting.insert(state(name)); }
  void add(const std::string& from, Sym input, char top,
           const std::string& to, const std::string& push) {
    m.rules.push_back({state(from), input, top, state(to), push});
  }
  Pda build() {
    m.validate_deterministic();
    return m;
  }
};

namespace detail {

struct PdaConfig {
  int state;
  std::size_t pos;
  std::string stack;
  bool operator<(const PdaConfig& o) const {
    if (state != o.state) return state < o.state;
    if (pos != o.pos) return pos < o.pos;
    return stack < o.stack;
  }
};

}  // namespace detail

// Breadth-first configuration search with visited-set pruning; deterministic
// machines run the same search (it degenerates to the direct simulation).
inline RunOutcome pda_run(const Pda& m, const MWord& w,
                          const RunBounds& b = {}) {
  using detail::PdaConfig;
  std::size_t hmax = b.max_height(w.size());
  bool capped = false;
  std::set<PdaConfig> visited;
  // (config, silent steps since last consumption)
  std::vector<std::pair<PdaConfig, int>> frontier{{{m.initial, 0, ""}, 0}};
  visited.insert(frontier[0].first);
  while (!frontier.empty()) {
    auto [c, silent] = frontier.back();
    frontier.pop_back();
    if (c.pos == w.size() && m.accepting.count(c.state)) return RunOutcome::Accepted;
    for (const PdaRule& r : m.rules) {
      if (r.from != c.state) continue;
      if (r.top == 0) {
        if (!c.stack.empty()) continue;
      } else {
        if (c.stack.empty() || c.stack.back() != r.top) continue;
      }
      int nsilent;
      std::size_t npos = c.pos;
      if (r.input == 0) {
        nsilent = silent + 1;
        if (nsilent > b.max_silent) {
          capped = true;
          continue;
        }
      } else {
        if (c.pos >= w.size() || w[c.pos] != r.input) continue;
        npos = c.pos + 1;
        nsilent = 0;
      }
      PdaConfig n{r.to, npos, c.stack};
      if (r.top != 0) n.stack.pop_back();
      n.stack += r.push;
      if (n.stack.size() > hmax) {
        capped = true;
        continue;
      }
      if (visited.insert(n).second) frontier.push_back({n, nsilent});
    }
  }
  return capped ? RunOutcome::ResourceCap : RunOutcome::Rejected;
}

// ---------------------------------------------------------------------------
// One-way stack automaton: the head may walk the stack read-only; push and
// pop act only at the top.

enum class SaAction : std::uint8_t { Push, Pop, Up, Down, Stay };

struct SaRule {
  int from = 0;
  Sym input = 0;        // 0 = silent
  char under = 0;       // 0 = empty stack, else symbol under the pointer
  bool at_top = false;  // required pointer-at-top flag (meaningful if under)
  int to = 0;
  SaAction action = SaAction::Stay;
  char push = 0;
};

struct StackAutomaton {
  std::string id;
  SymbolTable alphabet;
  bool pair_alphabet = true;
  std::string stack_alphabet;
  int num_states = 0;
  int initial = 0;
  std::set<int> accepting;
  std::vector<SaRule> rules;

  void validate() const {
    for (const auto& r : rules) {
      bool needs_top = r.action == SaAction::Push || r.action == SaAction::Pop;
      if (needs_top && r.under != 0 && !r.at_top)
        throw std::invalid_argument(
            id + ": push/pop permitted only with the pointer at the top");
      if (r.action == SaAction::Pop && r.under == 0)
        throw std::invalid_argument(id + ": pop on empty stack");
      if (r.action == SaAction::Push && r.push == 0)
        throw std::invalid_argument(id + ": push without a symbol");
    }
  }
};

struct SaBuilder {
  StackAutomaton m;
  std::map<std::string, int> names;

  explicit SaBuilder(std::string id, SymbolTable alpha, bool pairs,
                     std::string stack_alpha) {
    m.id = std::move(id);
    m.alphabet = std::move(alpha);
    m.pair_alphabet = pairs;
    m.stack_alphabet = std::move(stack_alpha);
  }
  int state(const std::string& name) {
    auto it = names.find(name);
    if (it != names.end()) return it->second;
    int q = m.num_states++;
    names.emplace(name, q);
    return q;
  }
  void initial(const std::string& name) { m.initial = state(name); }
  void accept(const std::string& name) { m.accepting.insert(state(name)); }
  void add(const std::string& from, Sym input, char under, bool at_top,
           const std::string& to, SaAction act, char push_sym = 0) {
    m.rules.push_back(
        {state(from), input, under, at_top, state(to), act, push_sym});
  }
  StackAutomaton build() {
    m.validate();
    return m;
  }
};

namespace detail {

struct SaConfig {
  int state;
  std::size_t pos;
  std::string stack;
  int ptr;  // index from the bottom; -1 when the stack is empty
  bool operator<(const SaConfig& o) const {
    if (state != o.state) return state < o.state;
    if (pos != o.pos) return pos < o.pos;
    if (ptr != o.ptr) return ptr < o.ptr;
    return stack < o.stack;
  }
};

// Applies rule r to config c if its guard matches; returns the successor.
inline std::optional<SaConfig> sa_apply(const SaRule& r, const SaConfig& c) {
  if (r.under == 0) {
    if (!c.stack.empty()) return std::nullopt;
  } else {
    if (c.stack.empty() || c.stack[c.ptr] != r.under) return std::nullopt;
    bool at_top = c.ptr + 1 == static_cast<int>(c.stack.size());
    if (at_top != r.at_top) return std::nullopt;
  }
  SaConfig n = c;
  n.state = r.to;
  switch (r.action) {
    case SaAction::Push:
      n.stack += r.push;
      n.ptr = static_cast<int>(n.stack.size()) - 1;
      break;
    case SaAction::Pop:
      n.stack.pop_back();
      n.ptr = static_cast<int>(n.stack.size()) - 1;  // -1 when emptied
      break;
    case SaAction::Up:
      if (n.ptr + 1 >= static_cast<int>(n.stack.size())) return std::nullopt;
      ++n.ptr;
      break;
    case SaAction::Down:
      if (n.ptr <= 0) return std::nullopt;
      --n.ptr;
      break;
    case SaAction::Stay:
      break;
  }
  return n;
}

}  // namespace detail

inline RunOutcome sa_run(const StackAutomaton& m, const MWord& w,
                         const RunBounds& b = {}) {
  using detail::SaConfig;
  m.validate();
  std::size_t hmax = b.max_height(w.size());
  bool capped = false;
  std::set<SaConfig> visited;
  std::vector<std::pair<SaConfig, int>> frontier{{{m.initial, 0, "", -1}, 0}};
  visited.insert(frontier[0].first);
  while (!frontier.empty()) {
    auto [c, silent] = frontier.back();
    frontier.pop_back();
    if (c.pos == w.size() && m.accepting.count(c.state)) return RunOutcome::Accepted;
    for (const SaRule& r : m.rules) {
      if (r.from != c.state) continue;
      int nsilent;
      if (r.input == 0) {
        nsilent = silent + 1;
        if (nsilent > b.max_silent) {
          capped = true;
          continue;
        }
      } else {
        if (c.pos >= w.size() || w[c.pos] != r.input) continue;
        nsilent = 0;
      }
      auto n = detail::sa_apply(r, c);
      if (!n) continue;
      if (r.input != 0) n->pos = c.pos + 1;
      if (n->stack.size() > hmax) {
        capped = true;
        continue;
      }
      if (visited.insert(*n).second) frontier.push_back({*n, nsilent});
    }
  }
  return capped ? RunOutcome::ResourceCap : RunOutcome::Rejected;
}

// ---------------------------------------------------------------------------
// Machine handle used by enumeration and audits.

struct MachineRef {
  const SyncFsa* fsa = nullptr;
  const Pda* pda = nullptr;
  const StackAutomaton* sa = nullptr;

  MachineRef(const SyncFsa& m) : fsa(&m) {}           // NOLINT
  MachineRef(const Pda& m) : pda(&m) {}               // NOLINT
  MachineRef(const StackAutomaton& m) : sa(&m) {}     // NOLINT

  const std::string& id() const {
    if (fsa) return fsa->id;
    if (pda) return pda->id;
    return sa->id;
  }

  RunOutcome run(const MWord& w, const RunBounds& b = {}) const {
    if (fsa) return fsa->run(w) ? RunOutcome::Accepted : RunOutcome::Rejected;
    if (pda) return pda_run(*pda, w, b);
    return sa_run(*sa, w, b);
  }
};

// ---------------------------------------------------------------------------
// Enumeration of accepted words by viable-prefix search over configuration
// sets. `free_sym`, when nonzero, is the symbol that does not count against
// `deviation_budget` (a negative budget means unrestricted).

struct EnumOptions {
  RunBounds bounds{};
  std::size_t node_cap = 30'000'000;  // guard against runaway machines
  Sym free_sym = 0;
  long deviation_budget = -1;
};

namespace detail {

template <class Config, class StepFn, class AcceptFn, class SymbolsFn>
void enumerate_generic(std::set<Config> start, int maxlen,
                       const EnumOptions& opt, StepFn step, AcceptFn accepts,
                       SymbolsFn symbols_of, std::vector<MWord>& out) {
  std::size_t nodes = 0;
  MWord prefix;
  auto rec = [&](auto&& self, const std::set<Config>& cur,
                 long budget) -> void {
    if (++nodes > opt.node_cap)
      throw EnumCapError("enumerate_accepted: node cap exceeded");
    if (accepts(cur)) out.push_back(prefix);
    if (static_cast<int>(prefix.size()) == maxlen) return;
    std::set<Sym> syms = symbols_of(cur);
    for (Sym s : syms) {
      long nb = budget;
      if (opt.deviation_budget >= 0 && s != opt.free_sym) {
        if (nb == 0) continue;
        --nb;
      }
      std::set<Config> next = step(cur, s);
      if (next.empty()) continue;
      prefix.push_back(s);
      self(self, next, nb);
      prefix.pop_back();
    }
  };
  rec(rec, start, opt.deviation_budget);
  std::sort(out.begin(), out.end(), [](const MWord& a, const MWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace detail

std::vector<MWord> enumerate_accepted(const MachineRef& m, int maxlen,
                                      const EnumOptions& opt = {});

namespace detail {

inline std::vector<MWord> enumerate_fsa(const SyncFsa& m, int maxlen,
                                        const EnumOptions& opt) {
  std::vector<MWord> out;
  std::set<Sym> all_syms;
  for (const auto& [k, v] : m.trans) all_syms.insert(k.second);
  enumerate_generic<int>(
      {m.initial}, maxlen, opt,
      [&](const std::set<int>& cur, Sym s) { return m.step(cur, s); },
      [&](const std::set<int>& cur) { return m.accepts_states(cur); },
      [&](const std::set<int>& cur) {
        std::set<Sym> syms;
        for (int q : cur)
          for (const auto& [k, v] : m.trans)
            if (k.first == q) syms.insert(k.second);
        return syms;
      },
      out);
  return out;
}

inline std::set<PdaConfig> pda_closure(const Pda& m, std::set<PdaConfig> cur,
                                       const EnumOptions& opt) {
  std::vector<PdaConfig> work(cur.begin(), cur.end());
  std::size_t steps = 0;
  while (!work.empty()) {
    PdaConfig c = work.back();
    work.pop_back();
    for (const PdaRule& r : m.rules) {
      if (r.from != c.state || r.input != 0) continue;
      if (r.top == 0) {
        if (!c.stack.empty()) continue;
      } else if (c.stack.empty() || c.stack.back() != r.top) {
        continue;
      }
      PdaConfig n{r.to, c.pos, c.stack};
      if (r.top != 0) n.stack.pop_back();
      n.stack += r.push;
      if (n.stack.size() > opt.bounds.max_height(c.pos + 8)) continue;
      if (++steps > static_cast<std::size_t>(opt.bounds.max_silent) * 64 +
                        4096)
        throw EnumCapError("enumerate_accepted: silent closure diverges");
      if (cur.insert(n).second) work.push_back(n);
    }
  }
  return cur;
}

inline std::vector<MWord> enumerate_pda(const Pda& m, int maxlen,
                                        const EnumOptions& opt) {
  std::vector<MWord> out;
  std::set<PdaConfig> start = pda_closure(m, {{m.initial, 0, ""}}, opt);
  enumerate_generic<PdaConfig>(
      start, maxlen, opt,
      [&](const std::set<PdaConfig>& cur, Sym s) {
        std::set<PdaConfig> next;
        for (const auto& c : cur)
          for (const PdaRule& r : m.rules) {
            if (r.from != c.state || r.input != s) continue;
            if (r.top == 0) {
              if (!c.stack.empty()) continue;
            } else if (c.stack.empty() || c.stack.back() != r.top) {
              continue;
            }
            PdaConfig n{r.to, c.pos + 1, c.stack};
            if (r.top != 0) n.stack.pop_back();
            n.stack += r.push;
            next.insert(n);
          }
        return pda_closure(m, std::move(next), opt);
      },
      [&](const std::set<PdaConfig>& cur) {
        for (const auto& c : cur)
          if (m.accepting.count(c.state)) return true;
        return false;
      },
      [&](const std::set<PdaConfig>& cur) {
        std::set<Sym> syms;
        for (const auto& c : cur)
          for (const PdaRule& r : m.rules)
            if (r.from == c.state && r.input != 0) syms.insert(r.input);
        return syms;
      },
      out);
  return out;
}

inline std::set<SaConfig> sa_closure(const StackAutomaton& m,
                                     std::set<SaConfig> cur,
                                     const EnumOptions& opt) {
  std::vector<SaConfig> work(cur.begin(), cur.end());
  std::size_t steps = 0;
  while (!work.empty()) {
    SaConfig c = work.back();
    work.pop_back();
    for (const SaRule& r : m.rules) {
      if (r.from != c.state || r.input != 0) continue;
      auto n = sa_apply(r, c);
      if (!n) continue;
      if (n->stack.size() > opt.bounds.max_height(c.pos + 8)) continue;
      if (++steps > static_cast<std::size_t>(opt.bounds.max_silent) * 64 +
                        4096)
        throw EnumCapError("enumerate_accepted: silent closure diverges");
      if (cur.insert(*n).second) work.push_back(*n);
    }
  }
  return cur;
}

inline std::vector<MWord> enumerate_sa(const StackAutomaton& m, int maxlen,
                                       const EnumOptions& opt) {
  std::vector<MWord> out;
  std::set<SaConfig> start = sa_closure(m, {{m.initial, 0, "", -1}}, opt);
  enumerate_generic<SaConfig>(
      start, maxlen, opt,
      [&](const std::set<SaConfig>& cur, Sym s) {
        std::set<SaConfig> next;
        for (const auto& c : cur)
          for (const SaRule& r : m.rules) {
            if (r.from != c.state || r.input != s) continue;
            auto n = sa_apply(r, c);
            if (!n) continue;
            n->pos = c.pos + 1;
            next.insert(*n);
          }
        return sa_closure(m, std::move(next), opt);
      },
      [&](const std::set<SaConfig>& cur) {
        for (const auto& c : cur)
          if (m.accepting.count(c.state)) return true;
        return false;
      },
      [&](const std::set<SaConfig>& cur) {
        std::set<Sym> syms;
        for (const auto& c : cur)
          for (const SaRule& r : m.rules)
            if (r.from == c.state && r.input != 0) syms.insert(r.input);
        return syms;
      },
      out);
  return out;
}

}  // namespace detail

inline std::vector<MWord> enumerate_accepted(const MachineRef& m, int maxlen,
                                             const EnumOptions& opt) {
  if (m.fsa) return detail::enumerate_fsa(*m.fsa, maxlen, opt);
  if (m.pda) return detail::enumerate_pda(*m.pda, maxlen, opt);
  return detail::enumerate_sa(*m.sa, maxlen, opt);
}

}  // namespace wreath
