#pragma once

#include <string>
#include <string_view>

#include "lambdalat/lambda_lattice.hpp"
#include "lambdalat/poset.hpp"

namespace lambdalat {

/// Hasse diagram as a Graphviz digraph: one node per element, one edge per
/// cover, drawn bottom to top with same-rank groups by level. For λ-lattices,
/// the explicit join/meet choices are listed in a leading comment block.
std::string export_dot(const Poset& p, std::string_view name = {});
std::string export_dot(const LambdaLattice& ll, std::string_view name = {});

}  // namespace lambdalat
