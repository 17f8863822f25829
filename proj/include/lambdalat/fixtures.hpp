#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambdalat/checkers.hpp"
#include "lambdalat/instance_io.hpp"
#include "lambdalat/lambda_lattice.hpp"

namespace lambdalat {

/// A named example λ-lattice with the (SM, WLCC, LCC) row it is known to
/// fall into.
struct Fixture {
  std::string name;
  std::string source;  // instance-file text
  ClassTriple expected;
  /// Set when the claims hold for every completion of the poset that keeps
  /// this one value; the stored lattice is the least such completion.
  std::optional<ExplicitChoice> family;
  LambdaLattice lattice;
};

const std::vector<Fixture>& fixture_catalog();

/// Throws std::out_of_range for unknown names.
const Fixture& fixture(std::string_view name);

/// "join(a,c)=d" style description of a family constraint.
std::string describe_family(const Fixture& f);

}  // namespace lambdalat
