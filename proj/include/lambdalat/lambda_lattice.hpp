#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lambdalat/element_set.hpp"
#include "lambdalat/poset.hpp"
#include "lambdalat/verdict.hpp"

namespace lambdalat {

/// An n×n table of a binary operation. Not required to be symmetric, so that
/// the axiom checker can see non-commutative input.
class OperationTable {
 public:
  OperationTable() = default;
  explicit OperationTable(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}
  /// Row-major rows; every row must have n entries.
  explicit OperationTable(const std::vector<std::vector<Element>>& rows);

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  void set(Element x, Element y, Element value) { cells_[x * n_ + y] = value; }
  void set_symmetric(Element x, Element y, Element value) {
    set(x, y, value);
    set(y, x, value);
  }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

using ElementPair = std::pair<Element, Element>;

/// Chosen join/meet values for incomparable pairs. Keys are stored with the
/// smaller index first.
class ChoiceSpec {
 public:
  void set_join(Element x, Element y, Element value) { joins_[key(x, y)] = value; }
  void set_meet(Element x, Element y, Element value) { meets_[key(x, y)] = value; }
  std::optional<Element> join(Element x, Element y) const;
  std::optional<Element> meet(Element x, Element y) const;

  const std::map<ElementPair, Element>& joins() const { return joins_; }
  const std::map<ElementPair, Element>& meets() const { return meets_; }

  static ElementPair key(Element x, Element y) { return x < y ? ElementPair{x, y} : ElementPair{y, x}; }
  friend bool operator==(const ChoiceSpec&, const ChoiceSpec&) = default;

 private:
  std::map<ElementPair, Element> joins_;
  std::map<ElementPair, Element> meets_;
};

/// Verdicts for the three defining identities. Witnesses: commutativity (x, y),
/// weak associativity (x, y, z), absorption (x, y).
struct AxiomReport {
  Verdict join_commutativity;
  Verdict meet_commutativity;
  Verdict join_weak_associativity;
  Verdict meet_weak_associativity;
  Verdict join_absorption;  // x ∨ (x ∧ y) = x
  Verdict meet_absorption;  // x ∧ (x ∨ y) = x

  bool commutativity() const { return join_commutativity.holds && meet_commutativity.holds; }
  bool weak_associativity() const { return join_weak_associativity.holds && meet_weak_associativity.holds; }
  bool absorption() const { return join_absorption.holds && meet_absorption.holds; }
  bool all_pass() const { return commutativity() && weak_associativity() && absorption(); }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// An algebra (L, ∨, ∧) satisfying commutativity, weak associativity and
/// absorption, together with its induced order (x <= y iff x ∨ y = y).
class LambdaLattice {
 public:
  /// Validates the tables against the axioms and derives the order. Throws
  /// RangeError for bad entries and AxiomError when an identity fails.
  static LambdaLattice from_tables(OperationTable join, OperationTable meet, std::vector<std::string> labels = {});

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element join(Element x, Element y) const { return join_(x, y); }
  Element meet(Element x, Element y) const { return meet_(x, y); }
  const OperationTable& join_table() const { return join_; }
  const OperationTable& meet_table() const { return meet_; }
  const std::string& label(Element x) const { return poset_.label(x); }

  friend bool operator==(const LambdaLattice&, const LambdaLattice&) = default;

 private:
  LambdaLattice(Poset poset, OperationTable join, OperationTable meet)
      : poset_(std::move(poset)), join_(std::move(join)), meet_(std::move(meet)) {}

  friend LambdaLattice from_choice(const Poset& p, const ChoiceSpec& choice);
  friend LambdaLattice restrict_to(const LambdaLattice& ll, ElementSet s);

  Poset poset_;
  OperationTable join_;
  OperationTable meet_;
};

/// Brute-force check of the identities over all pairs and triples. Throws
/// RangeError for out-of-range entries or mismatched table sizes.
AxiomReport check_axioms(const OperationTable& join, const OperationTable& meet);

bool idempotency_holds(const LambdaLattice& ll);

/// The value an omitted pair defaults to: the unique minimal common upper
/// bound (resp. maximal lower bound), if there is exactly one.
std::optional<Element> forced_join(const Poset& p, Element x, Element y);
std::optional<Element> forced_meet(const Poset& p, Element x, Element y);

/// Comparable pairs get max/min; incomparable pairs get the chosen value, or
/// the forced one when omitted. Throws NotDirectedError, BadChoiceError,
/// IncompleteChoiceError, RangeError.
LambdaLattice from_choice(const Poset& p, const ChoiceSpec& choice);

/// Every incomparable pair joins to the top and meets to the bottom.
/// Throws UnboundedError.
LambdaLattice acute(const Poset& p);

/// The choice that all incomparable pairs of `ll` actually use.
ChoiceSpec choice_of(const LambdaLattice& ll);

/// Joins and meets are the least upper / greatest lower bounds.
bool is_lattice(const LambdaLattice& ll);
/// x <= y implies x∨z <= y∨z and x∧z <= y∧z.
bool is_monotone(const LambdaLattice& ll);
/// x <= z implies x ∨ (y ∧ z) = (x ∨ y) ∧ z.
bool is_modular(const LambdaLattice& ll);
/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) and x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z).
bool is_distributive(const LambdaLattice& ll);

/// Nonempty subsets that are convex in the order and closed under both
/// operations, in increasing bitmask order.
std::vector<ElementSet> convex_closed_subsets(const LambdaLattice& ll);

/// The sub-algebra on a closed subset, renumbered in index order.
LambdaLattice restrict_to(const LambdaLattice& ll, ElementSet s);

}  // namespace lambdalat
