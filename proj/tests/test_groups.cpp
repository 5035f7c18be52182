#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include <wreath/element_io.hpp>
#include <wreath/free_word.hpp>
#include <wreath/wreath_group.hpp>

using namespace wreath;

namespace {

LLElement ll(std::int64_t pos, std::initializer_list<std::int64_t> lamps) {
  LLElement g;
  g.pos = pos;
  for (auto p : lamps) g.set_lamp(p, 1);
  return g;
}

// Independent reduction oracle: cancel one adjacent inverse pair at a time
// until no pair remains.
FreeWord reduce_by_repeated_cancellation(std::vector<std::uint8_t> raw) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      if ((raw[i] ^ 1u) == raw[i + 1]) {
        raw.erase(raw.begin() + i, raw.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  FreeWord w;
  w.letters = raw;
  return w;
}

}  // namespace

TEST_CASE("free_reduce basics") {
  CHECK(free_reduce({LA, LB, LBi}) == f2_letter_word(LA));
  CHECK(free_reduce({}) == FreeWord{});
  CHECK(free_reduce({LA, LAi, LA}) ==
        reduce_by_repeated_cancellation({LA, LAi, LA}));
  CHECK(free_reduce({LA, LAi, LA}) == f2_letter_word(LA));
  // idempotence and agreement with the one-step oracle on random words
  std::mt19937 rng(12345);
  for (int t = 0; t < 500; ++t) {
    std::vector<std::uint8_t> raw;
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) raw.push_back(rng() % 4);
    FreeWord w = free_reduce(raw);
    CHECK(w == reduce_by_repeated_cancellation(raw));
    CHECK(free_reduce(w.letters) == w);
  }
}

TEST_CASE("f2 word parsing round-trips") {
  CHECK(f2_to_string(f2_parse("ab-1a")) == "ab-1a");
  CHECK(f2_parse("e") == FreeWord{});
  CHECK_THROWS_AS(f2_parse("aa-1"), std::invalid_argument);
  CHECK_THROWS_AS(f2_parse("xy"), std::invalid_argument);
}

TEST_CASE("wreath_mul on Z2 wr Z matches the hand formulas") {
  LLElement id;
  CHECK(wreath_mul(id, id) == id);
  LLElement a = ll(1, {});
  LLElement h = ll(0, {0});
  CHECK(wreath_mul(a, h) == ll(1, {1}));
  CHECK(wreath_mul(h, a) == ll(1, {0}));
}

TEST_CASE("wreath_inv") {
  LLElement id;
  CHECK(wreath_inv(id) == id);
  CHECK(wreath_inv(ll(1, {})) == ll(-1, {}));
  CHECK(wreath_inv(ll(1, {1})) == ll(-1, {0}));
  CHECK(wreath_mul(ll(1, {1}), wreath_inv(ll(1, {1}))) == id);
}

TEST_CASE("group laws on small balls") {
  auto ball3 = bfs_ball(ll_generators(), 3);
  std::vector<LLElement> elts;
  for (const auto& [g, d] : ball3.entries) elts.push_back(g);
  for (const auto& x : elts)
    for (const auto& y : elts)
      for (const auto& z : elts)
        REQUIRE(wreath_mul(wreath_mul(x, y), z) ==
                wreath_mul(x, wreath_mul(y, z)));
  auto ball4 = bfs_ball(ll_generators(), 4);
  LLElement id;
  for (const auto& [g, d] : ball4.entries)
    REQUIRE(wreath_mul(g, wreath_inv(g)) == id);
}

TEST_CASE("bfs_ball distances") {
  auto b0 = bfs_ball(ll_generators(), 0);
  CHECK(b0.entries.size() == 1);
  CHECK(b0.distance(LLElement{}) == 0);

  auto b1 = bfs_ball(ll_generators(), 1);
  CHECK(b1.distance(ll(0, {0})) == 1);   // h
  CHECK(b1.distance(ll(1, {})) == 1);    // a
  CHECK(b1.distance(ll(-1, {})) == 1);   // a^-1
  CHECK(b1.entries.size() == 4);

  auto b3 = bfs_ball(ll_generators(), 3);
  CHECK(b3.distance(ll(0, {1})) == 3);   // geodesic a h a^-1

  // neighbor distances differ by at most one
  auto b5 = bfs_ball(ll_generators(), 5);
  std::vector<LLElement> gens;
  for (const auto& g : ll_generators()) {
    gens.push_back(g.value);
    gens.push_back(wreath_inv(g.value));
  }
  for (const auto& [g, d] : b5.entries)
    for (const auto& s : gens) {
      auto gs = wreath_mul(g, s);
      if (b5.contains(gs)) CHECK(std::abs(b5.distance(gs) - d) <= 1);
    }
}

TEST_CASE("bfs_ball resource cap") {
  CHECK_THROWS_AS(bfs_ball(ll_generators(), 9, /*cap=*/50), BallTooLarge);
}

TEST_CASE("element literals round-trip") {
  for (const char* lit :
       {"pos=0;lamps=", "pos=1;lamps=-1,1", "pos=-3;lamps=0"}) {
    CHECK(print_ll(parse_ll(lit)) == lit);
  }
  CHECK(print_grid(parse_grid("pos=(0,-2);lamps=(1,1),(2,0)")) ==
        "pos=(0,-2);lamps=(1,1),(2,0)");
  CHECK(print_f2(parse_f2("pos=ab-1;lamps=e,a")) == "pos=ab-1;lamps=e,a");
  CHECK(print_gz_z(parse_gz_z("pos=2;lamps=-1:3,0:-2")) ==
        "pos=2;lamps=-1:3,0:-2");
  CHECK_THROWS_AS(parse_ll("pos=x;lamps="), LiteralError);
  CHECK_THROWS_AS(parse_gz_z("pos=0;lamps=1"), LiteralError);
  CHECK_THROWS_AS(parse_f2("pos=aa-1;lamps="), LiteralError);

  // serialize-then-parse is the identity on a whole ball
  auto ball = bfs_ball(ll_generators(), 5);
  for (const auto& [g, d] : ball.entries)
    CHECK(parse_ll(print_ll(g)) == g);
}
