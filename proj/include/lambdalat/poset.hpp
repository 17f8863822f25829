#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdalat/element_set.hpp"
#include "lambdalat/verdict.hpp"

namespace lambdalat {

/// A finite partial order on 0..n-1. The full relation is stored as up-sets
/// and down-sets; covers, bounds and heights are derived on demand.
class Poset {
 public:
  /// The one-element poset.
  Poset();

  /// Builds a poset from its up-sets (`up[x]` = {y : x <= y}). Throws
  /// RangeError or CycleError unless the relation is a partial order.
  explicit Poset(std::vector<ElementSet> up, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  ElementSet carrier() const { return ElementSet::full(size()); }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(Element x, Element y) const { return !comparable(x, y); }
  /// x ≺ y: x < y with nothing strictly between.
  bool covers(Element x, Element y) const;

  ElementSet up_set(Element x) const { return up_[x]; }
  ElementSet down_set(Element x) const { return down_[x]; }
  ElementSet upper_covers(Element x) const;
  ElementSet lower_covers(Element x) const;

  /// All pairs (x, y) with x ≺ y, ordered by (x, y).
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }
  std::optional<Element> find(std::string_view label) const;
  Poset with_labels(std::vector<std::string> labels) const;

  /// Same order relation; labels ignored.
  bool same_order(const Poset& other) const { return up_ == other.up_; }
  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

/// A maximal run of covering steps.
struct Chain {
  std::vector<Element> elements;

  std::size_t length() const { return elements.empty() ? 0 : elements.size() - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

struct Bounds {
  Element bottom;
  Element top;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Reflexive-transitive closure of a cover (or any generating) list.
Poset poset_from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers,
                        std::vector<std::string> labels = {});

/// U(x,y) = {z : x,y <= z}.
ElementSet upper_bounds(const Poset& p, Element x, Element y);
/// L(x,y) = {z : z <= x,y}.
ElementSet lower_bounds(const Poset& p, Element x, Element y);

ElementSet minimal_elements(const Poset& p, ElementSet s);
ElementSet maximal_elements(const Poset& p, ElementSet s);

/// Every pair has a common upper bound and a common lower bound.
bool is_directed(const Poset& p);
std::optional<Element> bottom(const Poset& p);
std::optional<Element> top(const Poset& p);
std::optional<Bounds> bounds(const Poset& p);

ElementSet atoms(const Poset& p);
ElementSet coatoms(const Poset& p);

/// How h(x) is measured from the bottom. The two agree on graded posets.
enum class HeightMeasure {
  LongestChain,         // length of a longest chain from the bottom to x
  ShortestMaximalChain  // fewest covering steps from the bottom to x
};

/// Length of a longest chain from the bottom to x. Throws UnboundedError
/// when there is no bottom.
int height(const Poset& p, Element x);
/// Heights of all elements. Throws UnboundedError.
std::vector<int> heights(const Poset& p, HeightMeasure measure = HeightMeasure::LongestChain);
/// Height of the top. Throws UnboundedError without both bounds.
int length(const Poset& p);

/// Every maximal chain from a to the top, in lexicographic order.
/// Throws NoTopError.
std::vector<Chain> maximal_chains_to_top(const Poset& p, Element a);

/// For x ≺ y, x ≺ z, y ∥ z some u covers both y and z. Fails with the least
/// (x, y, z).
Verdict has_lu_covering(const Poset& p);

bool is_convex(const Poset& p, ElementSet s);

}  // namespace lambdalat
