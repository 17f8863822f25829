#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambdalat/lambda_lattice.hpp"
#include "lambdalat/poset.hpp"

namespace lambdalat {

// Line-oriented instance files:
//
//   # comment
//   elements: 0 a b c d 1
//   covers: 0 < a 0 < b a < c a < d b < c b < d c < 1 d < 1
//   join: a b = c
//   meet: c d = a
//   acute
//
// Lines may appear in any order and `covers:` may repeat. Omitted pairs take
// the forced sup/inf when one exists. `acute` sends every pair without an
// explicit value to the top and bottom.

struct ParsedInstance {
  Poset poset;
  /// Present when the file determines both operations on every pair. Absent
  /// only for files with no `join:`, `meet:` or `acute` line whose order
  /// leaves some pair undetermined.
  std::optional<LambdaLattice> lattice;
};

/// Throws ParseError, CycleError, RangeError, BadChoiceError,
/// IncompleteChoiceError, NotDirectedError, UnboundedError.
ParsedInstance parse_instance(std::string_view text);

/// As parse_instance, but a complete λ-lattice is required.
LambdaLattice parse_lattice(std::string_view text);

/// One join or meet value that the file has to state explicitly, because no
/// value is forced or the stored value differs from the forced one.
struct ExplicitChoice {
  bool is_join = true;
  Element x = 0;
  Element y = 0;
  Element value = 0;
  friend bool operator==(const ExplicitChoice&, const ExplicitChoice&) = default;
};

std::vector<ExplicitChoice> explicit_choices(const LambdaLattice& ll);

/// Canonical text: a name comment, elements, covers in (x, y) order, then
/// the explicit joins and meets.
std::string render_instance(const LambdaLattice& ll, std::string_view name = {});
std::string render_poset(const Poset& p, std::string_view name = {});

}  // namespace lambdalat
