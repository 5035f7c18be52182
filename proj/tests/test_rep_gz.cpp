#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include <wreath/rep_gz.hpp>
#include <wreath/rep_gz_machines.hpp>
#include <wreath/rep_ll.hpp>

using namespace wreath;

namespace {

GzZElement gzelt(std::int64_t pos,
                 std::initializer_list<std::pair<std::int64_t, std::int64_t>>
                     lamps) {
  GzZElement g;
  g.pos = pos;
  for (auto [p, v] : lamps) g.set_lamp(p, v);
  return g;
}

// Presentation with hand-picked cell words, used to pin the tagged-word
// layout of the encoder against known examples.
GPresentation table_presentation() {
  GPresentation p = z_presentation();
  p.name = "table";
  static const std::map<std::int64_t, std::string> enc = {
      {0, "0"}, {1, "011"}, {2, "1001"}, {3, "01"}, {4, "111"},
      {5, "000"}};
  p.encode = [](std::int64_t v) { return enc.at(v); };
  p.decode = [](const std::string& w) -> std::optional<std::int64_t> {
    for (const auto& [v, s] : enc)
      if (s == w) return v;
    return std::nullopt;
  };
  return p;
}

}  // namespace

TEST_CASE("gz_encode pins the worked examples") {
  GPresentation P = table_presentation();
  CHECK(gz_encode(P, gzelt(1, {{-1, 1}, {0, 2}, {1, 3}, {2, 4}})) ==
        "u11a001C1U11");
  CHECK(gz_encode(P, gzelt(0, {{-1, 4}, {0, 5}, {1, 3}})) == "U11B00u1");
  for (auto g : {gzelt(1, {{-1, 1}, {0, 2}, {1, 3}, {2, 4}}),
                 gzelt(0, {{-1, 4}, {1, 3}})}) {
    CHECK(gz_decode(P, gz_encode(P, g)) == g);
  }
}

TEST_CASE("gz decode errors") {
  GPresentation P = z_presentation();
  CHECK_THROWS_AS(gz_decode(P, ""), ParseError);
  CHECK_THROWS_AS(gz_decode(P, "0B"), ParseError);    // no cell start
  CHECK_THROWS_AS(gz_decode(P, "BB"), ParseError);    // two origin cells
  CHECK_THROWS_AS(gz_decode(P, "BC"), ParseError);    // B with C
  CHECK_THROWS_AS(gz_decode(P, "A"), ParseError);     // A without C
  CHECK_THROWS_AS(gz_decode(P, "uB"), ParseError);    // leading identity cell
  CHECK_THROWS_AS(gz_decode(P, "Bu"), ParseError);    // trailing identity cell
  CHECK_THROWS_AS(gz_decode(P, "B00"), ParseError);   // cell word outside L_G
}

TEST_CASE("Z binary encoding") {
  CHECK(z_binary_encode(0) == "0");
  CHECK(z_binary_encode(1) == "01");
  CHECK(z_binary_encode(2) == "001");
  CHECK(z_binary_encode(-1) == "1");
  CHECK(z_binary_encode(-2) == "11");
  CHECK(z_binary_encode(-3) == "101");
  GPresentation P = z_presentation();
  for (std::int64_t n = -300; n <= 300; ++n) {
    auto w = z_binary_encode(n);
    CHECK(P.in_language(w));
    CHECK(z_binary_decode(w) == n);
  }
  CHECK_FALSE(P.in_language(""));
  CHECK_FALSE(P.in_language("10"));
  CHECK_FALSE(P.in_language("010"));
}

TEST_CASE("Z increment relation automaton") {
  GPresentation P = z_presentation();
  const SyncFsa& inc = P.generator_fsas[0];
  for (std::int64_t n = -200; n <= 200; ++n) {
    Conv c = convolve(z_binary_encode(n), z_binary_encode(n + 1));
    CAPTURE(n);
    CHECK(fsa_run(inc, c));
    Conv wrong = convolve(z_binary_encode(n), z_binary_encode(n + 2));
    CHECK_FALSE(fsa_run(inc, wrong));
  }
}

TEST_CASE("gz_constants") {
  {
    GzConstants c = gz_constants(z2_presentation());
    CHECK(c.K0 == 1);
    CHECK(c.d == std::vector<long long>{0});
    CHECK(c.K == 1);
    CHECK(c.d_certified);
  }
  {
    GzConstants c = gz_constants(z_presentation());
    CHECK(c.K0 == 1);
    CHECK(c.d == std::vector<long long>{1});
    CHECK(c.K == 1);
    CHECK(c.d_certified);
  }
}

TEST_CASE("gz with G = Z2 reproduces the lamplighter representation") {
  GPresentation P = z2_presentation();
  auto ball = bfs_ball(ll_generators(), 4);
  for (const auto& [g, d] : ball.entries) {
    std::string w = gz_encode(P, ll_to_gz(g));
    CHECK(gz_word_to_ll(w) == ll_encode(g));
    CHECK(gz_to_ll(gz_decode(P, w)) == g);
  }
}

TEST_CASE("gz shift machine for G = Z2 matches the Theorem-1 machine") {
  GPresentation P = z2_presentation();
  SyncFsa gza = gz_mult_fsa(P, "a");
  SyncFsa lla = ll_mult_fsa("a");
  auto ball = bfs_ball(ll_generators(), 4);
  LLElement a;
  a.pos = 1;
  for (const auto& [g, d] : ball.entries) {
    for (const auto& [h, d2] : ball.entries) {
      Conv gzc = convolve(gz_encode(P, ll_to_gz(g)), gz_encode(P, ll_to_gz(h)));
      Conv llc = convolve(ll_encode(g), ll_encode(h));
      bool want = wreath_mul(g, a) == h;
      CAPTURE(gzc.top);
      CAPTURE(gzc.bottom);
      REQUIRE(fsa_run(lla, llc) == want);
      REQUIRE(fsa_run(gza, gzc) == want);
    }
  }
}

TEST_CASE("gz audits for G = Z2") {
  GPresentation P = z2_presentation();
  auto ball = bfs_ball(ll_generators(), 4);
  auto rep = gz_z2_representation();
  SoundnessPolicy policy;
  policy.full_maxlen = 5;
  LLElement a, h;
  a.pos = 1;
  h.set_lamp(0, 1);
  struct Row {
    std::string name;
    LLElement gen;
  } rows[] = {{"a", a}, {"a-1", wreath_inv(a)}, {"h", h}};
  for (const auto& row : rows) {
    SyncFsa m = gz_mult_fsa(P, row.name);
    AuditReport rpt =
        relation_audit(MachineRef(m), rep, row.name, row.gen, ball, policy);
    CAPTURE(row.name);
    CAPTURE(rpt.missed.size() ? rpt.missed[0] : "");
    CAPTURE(rpt.spurious.size() ? rpt.spurious[0] : "");
    CHECK(rpt.pass());
  }
}

TEST_CASE("gz audits for G = Z") {
  GPresentation P = z_presentation();
  auto ball = bfs_ball(gz_z_generators(), 4);
  auto rep = gz_z_representation();
  SoundnessPolicy policy;
  policy.full_maxlen = 5;
  GzZElement a = gzelt(1, {}), g1 = gzelt(0, {{0, 1}});
  struct Row {
    std::string name;
    GzZElement gen;
  } rows[] = {{"a", a},
              {"a-1", wreath_inv(a)},
              {"g1", g1},
              {"g1-1", wreath_inv(g1)}};
  for (const auto& row : rows) {
    SyncFsa m = gz_mult_fsa(P, row.name);
    AuditReport rpt =
        relation_audit(MachineRef(m), rep, row.name, row.gen, ball, policy);
    CAPTURE(row.name);
    CAPTURE(rpt.missed.size() ? rpt.missed[0] : "");
    CAPTURE(rpt.spurious.size() ? rpt.spurious[0] : "");
    CHECK(rpt.pass());
    CHECK(rpt.checked_pairs > 20);
  }
}

TEST_CASE("gz increment machine pin") {
  GPresentation P = z_presentation();
  SyncFsa m = gz_mult_fsa(P, "g1");
  CHECK(fsa_run(m, convolve(gz_encode(P, GzZElement{}),
                            gz_encode(P, gzelt(0, {{0, 1}})))));
  CHECK_FALSE(fsa_run(m, convolve("B", "B")));
}

TEST_CASE("gz round trip for G = Z on a radius-4 ball") {
  GPresentation P = z_presentation();
  auto ball = bfs_ball(gz_z_generators(), 4);
  for (const auto& [g, d] : ball.entries) {
    CHECK(gz_decode(P, gz_encode(P, g)) == g);
  }
}

TEST_CASE("gz lower bound (1/K)|w| - K0/K <= |g|") {
  {
    auto ball = bfs_ball(gz_z_generators(), 4);
    BoundsReport rpt = gz_bounds_check(z_presentation(), ball);
    CHECK(rpt.pass());
    CHECK(!rpt.lower_witnesses.empty());
    CHECK_FALSE(rpt.upper_applicable);
  }
  {
    auto ball = bfs_ball(ll_generators(), 5);
    BoundsReport rpt = gz_bounds_check(z2_presentation(), ball,
                                       std::make_pair(1LL, 0LL));
    CHECK(rpt.pass());
    CHECK(rpt.upper_applicable);
    CHECK(!rpt.upper_witnesses.empty());
  }
}
