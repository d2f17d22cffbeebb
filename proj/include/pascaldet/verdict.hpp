#pragma once

#include "pascaldet/exact.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pascaldet {

// First counterexample of a failed sweep: named coordinates in lexicographic
// significance order plus both side values rendered as exact decimal strings.
struct Counterexample {
  std::vector<std::pair<std::string, Index>> where;
  std::string lhs;
  std::string rhs;
  std::string note;

  std::string describe() const {
    std::string out;
    for (const auto& [name, value] : where) {
      if (!out.empty()) out += ", ";
      out += name + "=" + std::to_string(value);
    }
    out += ": " + lhs + " vs " + rhs;
    if (!note.empty()) out += " (" + note + ")";
    return out;
  }
};

struct Verdict {
  bool pass = true;
  Index checked = 0;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return pass; }

  static Verdict passing(Index checked) { return Verdict{true, checked, std::nullopt}; }
  static Verdict failing(Counterexample ce, Index checked) {
    return Verdict{false, checked, std::move(ce)};
  }
};

}  // namespace pascaldet
