#pragma once

// Relation audits: exhaustive two-directional checks that a machine's
// accepted convolutions coincide with a group relation on a finite ball.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "automata.hpp"
#include "wreath_group.hpp"

namespace wreath {

template <class Element>
struct Representation {
  std::string name;
  std::function<std::string(const Element&)> encode;
  // nullopt when the word is not in the representation language
  std::function<std::optional<Element>(const std::string&)> decode;
};

struct AuditReport {
  std::string machine_id;
  std::string generator;
  std::size_t checked_pairs = 0;
  std::size_t sound_words = 0;
  std::vector<std::string> missed;    // accepted by the group, not the machine
  std::vector<std::string> spurious;  // accepted by the machine, not valid
  bool capped = false;                // a resource bound fired somewhere

  bool pass() const { return missed.empty() && spurious.empty() && !capped; }
};

// Soundness sweep policy: an exhaustive enumeration up to full_maxlen plus,
// when sparse_maxlen > full_maxlen, an exhaustive enumeration up to
// sparse_maxlen over words with at most sparse_budget non-free pairs.
struct SoundnessPolicy {
  int full_maxlen = 8;
  int sparse_maxlen = 0;
  long sparse_budget = 3;
  Sym free_pair = 0;
};

template <class Base, class Lamp>
AuditReport relation_audit(const MachineRef& m,
                           const Representation<WreathElement<Base, Lamp>>& rep,
                           const std::string& gen_name,
                           const WreathElement<Base, Lamp>& gen,
                           const DistanceMap<Base, Lamp>& ball,
                           const SoundnessPolicy& policy = {},
                           const RunBounds& bounds = {}) {
  AuditReport report;
  report.machine_id = m.id();
  report.generator = gen_name;

  // Completeness: every in-ball edge g -> g*gen must be accepted.
  for (const auto& [g, dist] : ball.entries) {
    auto g2 = wreath_mul(g, gen);
    if (!ball.contains(g2)) continue;
    Conv conv = convolve(rep.encode(g), rep.encode(g2));
    RunOutcome out = m.run(conv.to_mword(), bounds);
    ++report.checked_pairs;
    if (out == RunOutcome::ResourceCap) {
      report.capped = true;
      report.missed.push_back("cap: " + conv.top + "|" + conv.bottom);
    } else if (out != RunOutcome::Accepted) {
      report.missed.push_back(conv.top + "|" + conv.bottom);
    }
  }

  // Soundness: every accepted convolution in the sweep must decode to a
  // valid related pair. Decode failures are spurious words, not crashes.
  auto check_word = [&](const MWord& w) {
    ++report.sound_words;
    auto parts = deconvolve(w);
    std::string shown;
    for (Sym s : w) shown += sym_to_string(s) + ".";
    if (!parts) {
      report.spurious.push_back("bad padding: " + shown);
      return;
    }
    auto gu = rep.decode(parts->first);
    auto gv = rep.decode(parts->second);
    if (!gu || !gv) {
      report.spurious.push_back("undecodable: " + parts->first + "|" +
                                parts->second);
      return;
    }
    if (!(wreath_mul(*gu, gen) == *gv))
      report.spurious.push_back("unrelated: " + parts->first + "|" +
                                parts->second);
  };

  try {
    EnumOptions full;
    full.bounds = bounds;
    std::vector<MWord> words = enumerate_accepted(m, policy.full_maxlen, full);
    for (const auto& w : words) check_word(w);
    if (policy.sparse_maxlen > policy.full_maxlen) {
      EnumOptions sparse;
      sparse.bounds = bounds;
      sparse.free_sym = policy.free_pair;
      sparse.deviation_budget = policy.sparse_budget;
      std::vector<MWord> more =
          enumerate_accepted(m, policy.sparse_maxlen, sparse);
      for (const auto& w : more)
        if (static_cast<int>(w.size()) > policy.full_maxlen) check_word(w);
    }
  } catch (const EnumCapError& e) {
    report.capped = true;
    report.spurious.push_back(std::string("cap: ") + e.what());
  }

  return report;
}

}  // namespace wreath
