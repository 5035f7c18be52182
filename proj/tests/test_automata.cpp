#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include <wreath/automata.hpp>

using namespace wreath;

namespace {

SymbolTable binary_table() { return SymbolTable({"0", "1"}, "01"); }

// Dyck-1 over ( ); acceptance is by final state, so balance is surfaced
// through a silent move that fires only on an empty stack.
Pda dyck1() {
  PdaBuilder b("dyck1", SymbolTable({"(", ")"}, "()"), false, "X");
  b.initial("ok");
  b.accept("acc");
  b.add("ok", sym('('), 0, "ok", "X");
  b.add("ok", sym('('), 'X', "ok", "XX");
  b.add("ok", sym(')'), 'X', "ok", "");
  b.add("ok", 0, 0, "acc", "");
  return b.build();
}

Pda dyck2() {
  PdaBuilder b("dyck2", SymbolTable({"(", ")", "[", "]"}, "()[]"), false,
               "XY");
  b.initial("ok");
  b.accept("acc");
  for (char open : {'(', '['}) {
    char mark = open == '(' ? 'X' : 'Y';
    b.add("ok", sym(open), 0, "ok", std::string(1, mark));
    for (char top : {'X', 'Y'})
      b.add("ok", sym(open), top, "ok", std::string(1, top) + mark);
  }
  b.add("ok", sym(')'), 'X', "ok", "");
  b.add("ok", sym(']'), 'Y', "ok", "");
  b.add("ok", 0, 0, "acc", "");
  return b.build();
}

// {a^n b^n c^n}: counts a's on the stack (bottom marked B, rest X), walks
// the stack down one step per b, then pops one symbol per c. Membership is
// checked by counting in the tests.
StackAutomaton abc_counter() {
  SaBuilder b("abc", SymbolTable({"a", "b", "c"}, "abc"), false, "BX");
  b.initial("start");
  b.accept("start");
  b.add("start", sym('a'), 0, false, "A", SaAction::Push, 'B');
  b.add("A", sym('a'), 'B', true, "A", SaAction::Push, 'X');
  b.add("A", sym('a'), 'X', true, "A", SaAction::Push, 'X');
  // b-phase: the first b stays, later ones move down; the pointer must sit
  // on the bottom marker exactly when the b's run out
  b.add("A", sym('b'), 'X', true, "B1", SaAction::Stay);
  b.add("A", sym('b'), 'B', true, "B2", SaAction::Stay);
  b.add("B1", sym('b'), 'X', true, "B1", SaAction::Down);
  b.add("B1", sym('b'), 'X', false, "B1", SaAction::Down);
  // climb back to the top, then pop one symbol per c
  b.add("B1", 0, 'B', false, "CL", SaAction::Up);
  b.add("B2", 0, 'B', true, "POP", SaAction::Stay);
  b.add("CL", 0, 'X', false, "CL", SaAction::Up);
  b.add("CL", 0, 'X', true, "POP", SaAction::Stay);
  b.add("POP", sym('c'), 'X', true, "POP", SaAction::Pop);
  b.add("POP", sym('c'), 'B', true, "DONE", SaAction::Pop);
  b.accept("DONE");
  return b.build();
}

bool abc_accepts(const std::string& s) {
  return sa_run(abc_counter(), to_mword(s)) == RunOutcome::Accepted;
}

// Naive path search used as an independent oracle for fsa_run.
bool fsa_run_naive(const SyncFsa& m, const MWord& w, int q, std::size_t k) {
  if (k == w.size()) return m.accepting.count(q) != 0;
  auto it = m.trans.find({q, w[k]});
  if (it == m.trans.end()) return false;
  for (int next : it->second)
    if (fsa_run_naive(m, w, next, k + 1)) return true;
  return false;
}

}  // namespace

TEST_CASE("convolve") {
  CHECK(convolve("01", "0").pretty() == "01\n0#");
  Conv c = convolve("", "ab");
  CHECK(c.size() == 2);
  CHECK(c.at(0) == pair_sym('#', 'a'));
  CHECK(c.at(1) == pair_sym('#', 'b'));
  Conv d = convolve("AC", "AC");
  CHECK(d.at(0) == pair_sym('A', 'A'));
  CHECK(d.at(1) == pair_sym('C', 'C'));
}

TEST_CASE("deconvolve recovers both words") {
  // convolution determines (u, v) uniquely up to length 6 over a 4-symbol
  // table; checked by full enumeration of word pairs.
  const std::string sigma = "abcd";
  std::vector<std::string> words{""};
  for (int len = 0; len < 3; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len)
        for (char c : sigma) next.push_back(w + c);
    words.insert(words.end(), next.begin(), next.end());
  }
  std::size_t pairs = 0;
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.empty() && v.empty()) continue;
      auto back = deconvolve(convolve(u, v).to_mword());
      REQUIRE(back.has_value());
      REQUIRE(back->first == u);
      REQUIRE(back->second == v);
      ++pairs;
    }
  CHECK(pairs > 400);
}

TEST_CASE("fsa_run basics") {
  {
    FsaBuilder b("eps-acc", binary_table(), true);
    b.initial("s");
    b.accept("s");
    CHECK(fsa_run(b.build(), convolve("", "")));
  }
  {
    FsaBuilder b("eps-rej", binary_table(), true);
    b.initial("s");
    b.accept("t");
    b.add("s", pair_sym('0', '0'), "t");
    SyncFsa m = b.build();
    CHECK_FALSE(fsa_run(m, convolve("", "")));
    CHECK(fsa_run(m, convolve("0", "0")));
    CHECK_FALSE(fsa_run(m, convolve("0", "1")));
  }
  {
    FsaBuilder b("unknown", binary_table(), true);
    b.initial("s");
    SyncFsa m = b.build();
    CHECK_THROWS_AS(fsa_run(m, convolve("2", "0")), std::invalid_argument);
  }
}

TEST_CASE("fsa_run agrees with a naive path search on random machines") {
  std::mt19937 rng(20240811);
  for (int t = 0; t < 1000; ++t) {
    FsaBuilder b("rand", binary_table(), true);
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Sym> syms;
    for (char x : {'0', '1', '#'})
      for (char y : {'0', '1', '#'})
        if (x != '#' || y != '#') syms.push_back(pair_sym(x, y));
    for (int i = 0; i < n; ++i) {
      std::string from = "q" + std::to_string(i);
      int outdeg = static_cast<int>(rng() % 4);
      for (int e = 0; e < outdeg; ++e)
        b.add(from, syms[rng() % syms.size()],
              "q" + std::to_string(rng() % n));
      if (rng() % 3 == 0) b.accept(from);
    }
    b.initial("q0");
    SyncFsa m = b.build();
    MWord w;
    int len = static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) w.push_back(syms[rng() % syms.size()]);
    CHECK(m.run(w) == fsa_run_naive(m, w, m.initial, 0));
  }
}

TEST_CASE("pda_run on bracket fixtures") {
  Pda d1 = dyck1();
  CHECK(pda_run(d1, to_mword("(())")) == RunOutcome::Accepted);
  CHECK(pda_run(d1, to_mword("(()")) == RunOutcome::Rejected);
  CHECK(pda_run(d1, to_mword(")(")) == RunOutcome::Rejected);
  Pda d2 = dyck2();
  CHECK(pda_run(d2, to_mword("([])")) == RunOutcome::Accepted);
  CHECK(pda_run(d2, to_mword("([)]")) == RunOutcome::Rejected);
}

TEST_CASE("pda deterministic flag validation") {
  PdaBuilder b("conflict", binary_table(), false, "X");
  b.initial("s");
  b.add("s", sym('0'), 0, "s", "X");
  b.add("s", 0, 0, "s", "X");
  b.m.deterministic = true;
  CHECK_THROWS_AS(b.build(), std::invalid_argument);
}

TEST_CASE("sa_run basics") {
  {
    SaBuilder b("empty-acc", binary_table(), false, "X");
    b.initial("s");
    b.accept("s");
    StackAutomaton m = b.build();
    CHECK(sa_run(m, {}) == RunOutcome::Accepted);
    CHECK(sa_run(m, to_mword("0")) == RunOutcome::Rejected);
  }
  {
    SaBuilder b("bad", binary_table(), false, "X");
    b.initial("s");
    b.add("s", sym('0'), 'X', false, "s", SaAction::Push, 'X');
    CHECK_THROWS_AS(b.build(), std::invalid_argument);
  }
  CHECK(abc_accepts("aabbcc"));
  CHECK(abc_accepts("abc"));
  CHECK(abc_accepts(""));
  CHECK_FALSE(abc_accepts("aabbc"));
  CHECK_FALSE(abc_accepts("aabbbccc"));
  CHECK_FALSE(abc_accepts("abcabc"));

  // cross-check against counting on all words up to length 6
  std::vector<std::string> words{""};
  std::size_t head = 0;
  while (head < words.size()) {
    std::string w = words[head++];
    if (w.size() >= 6) continue;
    for (char c : {'a', 'b', 'c'}) words.push_back(w + c);
  }
  for (const auto& w : words) {
    std::size_t n = w.size() / 3;
    bool want = w.size() % 3 == 0 &&
                w == std::string(n, 'a') + std::string(n, 'b') +
                         std::string(n, 'c');
    REQUIRE(abc_accepts(w) == want);
  }
}

TEST_CASE("enumerate_accepted") {
  {
    FsaBuilder b("loop1", SymbolTable({"1"}, "1"), false);
    b.initial("s");
    b.accept("s");
    b.add("s", sym('1'), "s");
    auto words = enumerate_accepted(b.build(), 3);
    REQUIRE(words.size() == 4);
    CHECK(words[0].empty());
    CHECK(words[3] == to_mword("111"));
  }
  {
    auto words = enumerate_accepted(dyck1(), 4);
    std::vector<MWord> want{to_mword(""), to_mword("()"), to_mword("(())"),
                            to_mword("()()")};
    CHECK(words == want);
  }
  {
    // monotone in maxlen
    for (int n = 0; n < 5; ++n) {
      auto small = enumerate_accepted(dyck2(), n);
      auto big = enumerate_accepted(dyck2(), n + 1);
      for (const auto& w : small)
        CHECK(std::find(big.begin(), big.end(), w) != big.end());
    }
  }
  {
    auto words = enumerate_accepted(abc_counter(), 6);
    std::vector<MWord> want{to_mword(""), to_mword("abc"),
                            to_mword("aabbcc")};
    CHECK(words == want);
  }
  {
    // cap fires on a machine with an enormous language
    FsaBuilder b("huge", binary_table(), false);
    b.initial("s");
    b.accept("s");
    b.add("s", sym('0'), "s");
    b.add("s", sym('1'), "s");
    EnumOptions opt;
    opt.node_cap = 100;
    CHECK_THROWS_AS(enumerate_accepted(b.build(), 20, opt), EnumCapError);
  }
}
