#pragma once

// Element literal grammar shared by the CLI and test fixtures:
//   Z2 wr Z      pos=<int>;lamps=<int>,<int>,...
//   Z2 wr Z^2    pos=(<int>,<int>);lamps=(<int>,<int>),...
//   Z2 wr F2     pos=<fword>;lamps=<fword>,...   (fword e.g. ab-1a, e)
//   Z  wr Z      pos=<int>;lamps=<int>:<int>,...  (position:value)

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath_group.hpp"

namespace wreath {

struct LiteralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::int64_t parse_int(const std::string& s) {
  if (s.empty()) throw LiteralError("expected integer, got empty string");
  std::size_t used = 0;
  std::int64_t v;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw LiteralError("bad integer '" + s + "'");
  }
  if (used != s.size()) throw LiteralError("bad integer '" + s + "'");
  return v;
}

inline GridPoint parse_grid_point(const std::string& s) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw LiteralError("bad grid point '" + s + "'");
  auto inner = s.substr(1, s.size() - 2);
  auto parts = split(inner, ',');
  if (parts.size() != 2) throw LiteralError("bad grid point '" + s + "'");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

// Splits "pos=<X>;lamps=<Y>" into X and Y.
inline std::pair<std::string, std::string> split_literal(
    const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos || s.rfind("pos=", 0) != 0 ||
      s.compare(semi + 1, 6, "lamps=") != 0)
    throw LiteralError("element literal must look like pos=...;lamps=...");
  return {s.substr(4, semi - 4), s.substr(semi + 7)};
}

// Splits a lamp list at top-level commas (commas inside (..) are kept).
inline std::vector<std::string> split_lamps(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline LLElement parse_ll(const std::string& s) {
  auto [pos, lamps] = detail::split_literal(s);
  LLElement g;
  g.pos = detail::parse_int(pos);
  for (const auto& item : detail::split_lamps(lamps)) {
    std::int64_t p = detail::parse_int(item);
    if (g.lamps.count(p)) throw LiteralError("duplicate lamp position");
    g.set_lamp(p, 1);
  }
  return g;
}

inline std::string print_ll(const LLElement& g) {
  std::ostringstream os;
  os << "pos=" << g.pos << ";lamps=";
  bool first = true;
  for (const auto& [p, v] : g.lamps) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os.str();
}

inline GridElement parse_grid(const std::string& s) {
  auto [pos, lamps] = detail::split_literal(s);
  GridElement g;
  g.pos = detail::parse_grid_point(pos);
  for (const auto& item : detail::split_lamps(lamps)) {
    GridPoint p = detail::parse_grid_point(item);
    if (g.lamps.count(p)) throw LiteralError("duplicate lamp position");
    g.set_lamp(p, 1);
  }
  return g;
}

inline std::string print_grid(const GridElement& g) {
  std::ostringstream os;
  os << "pos=(" << g.pos.x << ',' << g.pos.y << ");lamps=";
  bool first = true;
  for (const auto& [p, v] : g.lamps) {
    if (!first) os << ',';
    os << '(' << p.x << ',' << p.y << ')';
    first = false;
  }
  return os.str();
}

inline F2Element parse_f2(const std::string& s) {
  auto [pos, lamps] = detail::split_literal(s);
  F2Element g;
  try {
    g.pos = f2_parse(pos);
    for (const auto& item : detail::split_lamps(lamps)) {
      FreeWord p = f2_parse(item);
      if (g.lamps.count(p)) throw LiteralError("duplicate lamp position");
      g.set_lamp(p, 1);
    }
  } catch (const std::invalid_argument& e) {
    throw LiteralError(e.what());
  }
  return g;
}

inline std::string print_f2(const F2Element& g) {
  std::ostringstream os;
  os << "pos=" << f2_to_string(g.pos) << ";lamps=";
  bool first = true;
  for (const auto& [p, v] : g.lamps) {
    if (!first) os << ',';
    os << f2_to_string(p);
    first = false;
  }
  return os.str();
}

inline GzZElement parse_gz_z(const std::string& s) {
  auto [pos, lamps] = detail::split_literal(s);
  GzZElement g;
  g.pos = detail::parse_int(pos);
  for (const auto& item : detail::split_lamps(lamps)) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw LiteralError("Z wr Z lamp must be position:value");
    std::int64_t p = detail::parse_int(item.substr(0, colon));
    std::int64_t v = detail::parse_int(item.substr(colon + 1));
    if (v == 0) throw LiteralError("lamp value 0 is the identity; omit it");
    if (g.lamps.count(p)) throw LiteralError("duplicate lamp position");
    g.set_lamp(p, v);
  }
  return g;
}

inline std::string print_gz_z(const GzZElement& g) {
  std::ostringstream os;
  os << "pos=" << g.pos << ";lamps=";
  bool first = true;
  for (const auto& [p, v] : g.lamps) {
    if (!first) os << ',';
    os << p << ':' << v;
    first = false;
  }
  return os.str();
}

}  // namespace wreath
