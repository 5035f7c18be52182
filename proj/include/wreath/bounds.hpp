#pragma once

// Shared verification-report types for word-length bounds of the form
// lambda*|w| + mu <= |g| <= xi*|w| + delta.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

struct ParseError : std::runtime_error {
  std::size_t index;
  ParseError(std::size_t idx, const std::string& msg)
      : std::runtime_error(msg + " (index " + std::to_string(idx) + ")"),
        index(idx) {}
};

struct Rational {
  long long num = 0;
  long long den = 1;
};

struct BoundsViolation {
  std::string element;
  long long word_len = 0;
  long long group_len = 0;
};

struct BoundsReport {
  std::string group;
  bool lower_applicable = true;
  bool upper_applicable = true;
  Rational lambda, mu, xi, delta;
  std::size_t checked = 0;
  std::vector<BoundsViolation> violations;
  std::vector<std::string> lower_witnesses;  // attain lambda*|w| + mu == |g|
  std::vector<std::string> upper_witnesses;  // attain |g| == xi*|w| + delta
  // Desk-scale evidence rows (used by the grid Remark check): |w|/|g| ratios.
  std::vector<std::pair<long long, long long>> ratio_family;

  bool pass() const { return violations.empty(); }
};

}  // namespace wreath
