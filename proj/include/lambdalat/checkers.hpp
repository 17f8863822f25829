#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lambdalat/lambda_lattice.hpp"
#include "lambdalat/poset.hpp"
#include "lambdalat/verdict.hpp"

namespace lambdalat {

/// For x ∥ y and x∧y < z < x some u has x∧y < u <= y and (z∨u)∧x = z.
/// Witness (x, y, z).
Verdict is_semimodular(const LambdaLattice& ll);

/// A quadruple (x, y, c, d) with x ∥ y, x∧y < c, d < x, c != d such that
/// c∨e = d∨f for every e, f in (x∧y, y]. Its existence rules out
/// semimodularity.
std::optional<std::vector<Element>> lemma1_refutes(const LambdaLattice& ll);

/// x∧y ≺ x ≺ x∨y implies y ≺ x∨y. Witness (x, y).
Verdict satisfies_wlcc(const LambdaLattice& ll);
/// x∧y ≺ x implies y ≺ x∨y. Witness (x, y).
Verdict satisfies_lcc(const LambdaLattice& ll);

/// x ∥ y, x ∥ z, y < z imply x∧y <= x∧z. Witness (x, y, z).
Verdict cond3(const LambdaLattice& ll);
/// As cond3 with y ≺ z.
Verdict cond4(const LambdaLattice& ll);
/// x ∥ y, x < z, y ≺ z imply not z < x∨y. Witness (x, y, z).
Verdict cond5(const LambdaLattice& ll);
/// Descending chain condition; holds on every finite carrier.
Verdict dcc(const LambdaLattice& ll);

/// Over pairs with a, b comparable or a∧b ≺ a or a∧b ≺ b:
/// h(a∨b) - h(a∧b) <= |h(a) - h(b)| + 2. Witness (a, b); the note carries
/// the four heights. Throws UnboundedError.
Verdict height_inequality(const LambdaLattice& ll, HeightMeasure measure = HeightMeasure::LongestChain);

/// x <= y implies x∧z <= y∧z. Witness (x, y, z).
Verdict monotone_wedge(const LambdaLattice& ll);

enum class AcuteClause { NoAtoms, UniqueAtomBelowAll, IsoToMk, Fails };

struct AcuteCharacterization {
  AcuteClause clause = AcuteClause::Fails;
  std::size_t k = 0;  // antichain size when clause == IsoToMk
  ElementSet atoms;
  ElementSet coatoms;
  friend bool operator==(const AcuteCharacterization&, const AcuteCharacterization&) = default;
};

const char* to_string(AcuteClause clause);

/// Which alternative of the acute characterization a bounded poset meets.
/// Throws UnboundedError.
AcuteCharacterization acute_characterization(const Poset& p);

/// Every atom incomparable to y forces y to be a coatom. Witness (x, y).
Verdict acute_atom_condition(const Poset& p);

/// 0, an antichain of k elements, 1. Labels "0", "a1".."ak", "1".
Poset mk_poset(std::size_t k);

/// Truth values of (SM, WLCC, LCC).
struct ClassTriple {
  bool sm = false;
  bool wlcc = false;
  bool lcc = false;
  friend auto operator<=>(const ClassTriple&, const ClassTriple&) = default;
};

struct PropertyReport {
  Verdict semimodular;
  Verdict wlcc;
  Verdict lcc;
  Verdict cond3;
  Verdict cond4;
  Verdict cond5;
  Verdict dcc;
  Verdict lu_covering;

  ClassTriple triple() const { return {semimodular.holds, wlcc.holds, lcc.holds}; }
  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

PropertyReport classify(const LambdaLattice& ll);

}  // namespace lambdalat
