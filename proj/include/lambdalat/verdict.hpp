#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lambdalat/element_set.hpp"

namespace lambdalat {

/// Outcome of a universally quantified check. A failing verdict carries the
/// lexicographically least violating assignment.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;
  std::string note;

  static Verdict pass(std::string note = {}) { return {true, {}, std::move(note)}; }
  static Verdict fail(std::vector<Element> witness, std::string note = {}) {
    return {false, std::move(witness), std::move(note)};
  }

  explicit operator bool() const { return holds; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace lambdalat
