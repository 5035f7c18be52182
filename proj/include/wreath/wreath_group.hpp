#pragma once

// Exact arithmetic in wreath products A wr B for B in {Z, Z^2, F2} and
// A in {Z2, Z}, plus a breadth-first word-length oracle over a declared
// symmetric generating set.

#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "free_word.hpp"

namespace wreath {

// ---------------------------------------------------------------------------
// Base groups. A base group supplies a point type with exact arithmetic.

struct ZBase {
  using Point = std::int64_t;
  static Point identity() { return 0; }
  static Point mul(Point a, Point b) { return a + b; }
  static Point inv(Point a) { return -a; }
  static const char* name() { return "Z"; }
};

struct GridPoint {
  std::int64_t x = 0, y = 0;
  bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const GridPoint& o) const { return !(*this == o); }
  bool operator<(const GridPoint& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

struct GridBase {
  using Point = GridPoint;
  static Point identity() { return {0, 0}; }
  static Point mul(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  static Point inv(Point a) { return {-a.x, -a.y}; }
  static const char* name() { return "Z2grid"; }
};

struct F2Base {
  using Point = FreeWord;
  static Point identity() { return FreeWord{}; }
  static Point mul(const Point& a, const Point& b) { return f2_mul(a, b); }
  static Point inv(const Point& a) { return f2_inv(a); }
  static const char* name() { return "F2"; }
};

// ---------------------------------------------------------------------------
// Lamp groups. Lamp states are integer group values; the zero value is the
// identity and never stored (canonical sparse support).

struct Z2Lamp {
  using Value = std::int64_t;  // 0 or 1
  static Value mul(Value a, Value b) { return a ^ b; }
  static Value inv(Value a) { return a; }
  static const char* name() { return "Z2"; }
};

struct ZLamp {
  using Value = std::int64_t;
  static Value mul(Value a, Value b) { return a + b; }
  static Value inv(Value a) { return -a; }
  static const char* name() { return "Z"; }
};

// ---------------------------------------------------------------------------

template <class Base, class Lamp = Z2Lamp>
struct WreathElement {
  using Point = typename Base::Point;
  using Value = typename Lamp::Value;

  std::map<Point, Value> lamps;  // canonical: no zero values
  Point pos = Base::identity();

  bool operator==(const WreathElement& o) const {
    return pos == o.pos && lamps == o.lamps;
  }
  bool operator!=(const WreathElement& o) const { return !(*this == o); }
  bool operator<(const WreathElement& o) const {
    if (!(pos == o.pos)) return pos < o.pos;
    return lamps < o.lamps;
  }

  Value lamp_at(const Point& p) const {
    auto it = lamps.find(p);
    return it == lamps.end() ? Value{0} : it->second;
  }

  void set_lamp(const Point& p, Value v) {
    if (v == Value{0})
      lamps.erase(p);
    else
      lamps[p] = v;
  }

  bool is_identity() const {
    return lamps.empty() && pos == Base::identity();
  }
};

// (f, b) * (f', b'): lamps x -> f(x) * f'(b^{-1} x), position b b'.
template <class Base, class Lamp>
WreathElement<Base, Lamp> wreath_mul(const WreathElement<Base, Lamp>& x,
                                     const WreathElement<Base, Lamp>& y) {
  WreathElement<Base, Lamp> r;
  r.lamps = x.lamps;
  for (const auto& [p, v] : y.lamps) {
    auto q = Base::mul(x.pos, p);  // f'(b^{-1} q) = v at q = b p
    typename Lamp::Value merged = Lamp::mul(r.lamp_at(q), v);
    r.set_lamp(q, merged);
  }
  r.pos = Base::mul(x.pos, y.pos);
  return r;
}

// Inverse: lamps y -> f(b y)^{-1}, position b^{-1}.
template <class Base, class Lamp>
WreathElement<Base, Lamp> wreath_inv(const WreathElement<Base, Lamp>& x) {
  WreathElement<Base, Lamp> r;
  r.pos = Base::inv(x.pos);
  for (const auto& [p, v] : x.lamps)
    r.set_lamp(Base::mul(r.pos, p), Lamp::inv(v));
  return r;
}

// ---------------------------------------------------------------------------
// Named generators and breadth-first balls.

template <class Base, class Lamp = Z2Lamp>
struct NamedGenerator {
  std::string name;
  WreathElement<Base, Lamp> value;
};

struct BallTooLarge : std::runtime_error {
  std::size_t visited;
  explicit BallTooLarge(std::size_t n)
      : std::runtime_error("bfs_ball: ball too large, visited " +
                           std::to_string(n) + " elements"),
        visited(n) {}
};

template <class Base, class Lamp = Z2Lamp>
struct DistanceMap {
  std::map<WreathElement<Base, Lamp>, int> entries;
  int radius = 0;

  int distance(const WreathElement<Base, Lamp>& g) const {
    auto it = entries.find(g);
    if (it == entries.end())
      throw std::out_of_range("DistanceMap: element outside the ball");
    return it->second;
  }
  bool contains(const WreathElement<Base, Lamp>& g) const {
    return entries.count(g) != 0;
  }
};

inline constexpr std::size_t kDefaultBallCap = 5'000'000;

// Exact geodesic distances from the identity over the generators and their
// inverses. Guideline radii: <= 9 for Z2 wr Z, <= 6 for Z2 wr F2 and
// Z2 wr Z^2.
template <class Base, class Lamp = Z2Lamp>
DistanceMap<Base, Lamp> bfs_ball(
    const std::vector<NamedGenerator<Base, Lamp>>& generators, int radius,
    std::size_t cap = kDefaultBallCap) {
  using Elt = WreathElement<Base, Lamp>;
  std::vector<Elt> step;
  for (const auto& g : generators) {
    step.push_back(g.value);
    Elt inv = wreath_inv(g.value);
    if (!(inv == g.value)) step.push_back(inv);
  }
  DistanceMap<Base, Lamp> ball;
  ball.radius = radius;
  Elt id;
  ball.entries[id] = 0;
  std::queue<Elt> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    Elt g = frontier.front();
    frontier.pop();
    int d = ball.entries[g];
    if (d == radius) continue;
    for (const Elt& s : step) {
      Elt h = wreath_mul(g, s);
      auto [it, inserted] = ball.entries.emplace(h, d + 1);
      if (inserted) {
        if (ball.entries.size() > cap) throw BallTooLarge(ball.entries.size());
        frontier.push(h);
      }
    }
  }
  return ball;
}

// Convenience instantiations used throughout.
using LLElement = WreathElement<ZBase, Z2Lamp>;      // Z2 wr Z
using GzZElement = WreathElement<ZBase, ZLamp>;      // Z wr Z
using F2Element = WreathElement<F2Base, Z2Lamp>;     // Z2 wr F2
using GridElement = WreathElement<GridBase, Z2Lamp>; // Z2 wr Z^2

inline std::vector<NamedGenerator<ZBase, Z2Lamp>> ll_generators() {
  LLElement a;
  a.pos = 1;
  LLElement h;
  h.set_lamp(0, 1);
  return {{"a", a}, {"h", h}};
}

inline std::vector<NamedGenerator<ZBase, ZLamp>> gz_z_generators() {
  GzZElement a;
  a.pos = 1;
  GzZElement g1;
  g1.set_lamp(0, 1);
  return {{"a", a}, {"g1", g1}};
}

inline std::vector<NamedGenerator<F2Base, Z2Lamp>> f2_generators() {
  F2Element a, b, h;
  a.pos = f2_letter_word(LA);
  b.pos = f2_letter_word(LB);
  h.set_lamp(FreeWord{}, 1);
  return {{"a", a}, {"b", b}, {"h", h}};
}

inline std::vector<NamedGenerator<GridBase, Z2Lamp>> grid_generators() {
  GridElement x, y, h;
  x.pos = {1, 0};
  y.pos = {0, 1};
  h.set_lamp({0, 0}, 1);
  return {{"x", x}, {"y", y}, {"h", h}};
}

}  // namespace wreath
