#include "lambdalat/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lambdalat/errors.hpp"

namespace lambdalat {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Poset::Poset() : up_{ElementSet::single(0)}, down_{ElementSet::single(0)}, labels_{"0"} {}

Poset::Poset(std::vector<ElementSet> up, std::vector<std::string> labels) : up_(std::move(up)) {
  const std::size_t n = up_.size();
  if (n == 0 || n > kMaxElements) {
    throw RangeError("poset size must be in 1.." + std::to_string(kMaxElements));
  }
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw RangeError("label count does not match element count");
  labels_ = std::move(labels);

  const ElementSet all = ElementSet::full(n);
  down_.assign(n, ElementSet{});
  for (Element x = 0; x < n; ++x) {
    if (!up_[x].subset_of(all)) throw RangeError("relation mentions an element outside the carrier");
    if (!up_[x].contains(x)) throw RangeError("relation is not reflexive at " + labels_[x]);
    for (Element y : up_[x]) down_[y].insert(x);
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : up_[x]) {
      if (y != x && up_[y].contains(x)) {
        throw CycleError("antisymmetry fails for " + labels_[x] + " and " + labels_[y]);
      }
      if (!up_[y].subset_of(up_[x])) throw RangeError("relation is not transitive through " + labels_[y]);
    }
  }
}

bool Poset::covers(Element x, Element y) const {
  return lt(x, y) && (up_[x] & down_[y]).size() == 2;
}

ElementSet Poset::upper_covers(Element x) const {
  ElementSet out;
  for (Element y : up_[x]) {
    if (covers(x, y)) out.insert(y);
  }
  return out;
}

ElementSet Poset::lower_covers(Element x) const {
  ElementSet out;
  for (Element y : down_[x]) {
    if (covers(y, x)) out.insert(y);
  }
  return out;
}

std::vector<std::pair<Element, Element>> Poset::cover_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x) {
    for (Element y : upper_covers(x)) out.emplace_back(x, y);
  }
  return out;
}

std::optional<Element> Poset::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Poset Poset::with_labels(std::vector<std::string> labels) const { return Poset(up_, std::move(labels)); }

Poset poset_from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers,
                        std::vector<std::string> labels) {
  if (n == 0 || n > kMaxElements) throw RangeError("poset size must be in 1.." + std::to_string(kMaxElements));
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) up[x] = ElementSet::single(x);
  auto name = [&](Element x) { return x < labels.size() ? labels[x] : std::to_string(x); };
  for (auto [x, y] : covers) {
    if (x >= n || y >= n) {
      std::ostringstream msg;
      msg << "cover (" << x << ", " << y << ") out of range for " << n << " elements";
      throw RangeError(msg.str());
    }
    if (x == y) throw CycleError("cover " + name(x) + " < " + name(y) + " relates an element to itself");
    up[x].insert(y);
  }
  // Warshall closure on rows.
  for (Element k = 0; k < n; ++k) {
    for (Element x = 0; x < n; ++x) {
      if (up[x].contains(k)) up[x] |= up[k];
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : up[x]) {
      if (y != x && up[y].contains(x)) {
        throw CycleError("covers contain a cycle through " + name(x) + " and " + name(y));
      }
    }
  }
  return Poset(std::move(up), std::move(labels));
}

ElementSet upper_bounds(const Poset& p, Element x, Element y) { return p.up_set(x) & p.up_set(y); }

ElementSet lower_bounds(const Poset& p, Element x, Element y) { return p.down_set(x) & p.down_set(y); }

ElementSet minimal_elements(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Element x : s) {
    if ((p.down_set(x) & s) == ElementSet::single(x)) out.insert(x);
  }
  return out;
}

ElementSet maximal_elements(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Element x : s) {
    if ((p.up_set(x) & s) == ElementSet::single(x)) out.insert(x);
  }
  return out;
}

bool is_directed(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (upper_bounds(p, x, y).empty() || lower_bounds(p, x, y).empty()) return false;
    }
  }
  return true;
}

std::optional<Element> bottom(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    if (p.up_set(x) == p.carrier()) return x;
  }
  return std::nullopt;
}

std::optional<Element> top(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    if (p.down_set(x) == p.carrier()) return x;
  }
  return std::nullopt;
}

std::optional<Bounds> bounds(const Poset& p) {
  auto b = bottom(p);
  auto t = top(p);
  if (!b || !t) return std::nullopt;
  return Bounds{*b, *t};
}

ElementSet atoms(const Poset& p) {
  auto b = bottom(p);
  if (!b) throw UnboundedError("atoms need a bottom element");
  return p.upper_covers(*b);
}

ElementSet coatoms(const Poset& p) {
  auto t = top(p);
  if (!t) throw UnboundedError("coatoms need a top element");
  return p.lower_covers(*t);
}

std::vector<int> heights(const Poset& p, HeightMeasure measure) {
  const auto b = bottom(p);
  if (!b) throw UnboundedError("height needs a bottom element");
  const std::size_t n = p.size();
  std::vector<int> h(n, -1);
  if (measure == HeightMeasure::ShortestMaximalChain) {
    // Breadth-first over covers.
    std::vector<Element> frontier{*b};
    h[*b] = 0;
    for (int level = 1; !frontier.empty(); ++level) {
      std::vector<Element> next;
      for (Element x : frontier) {
        for (Element y : p.upper_covers(x)) {
          if (h[y] < 0) {
            h[y] = level;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return h;
  }
  std::function<int(Element)> visit = [&](Element x) -> int {
    if (h[x] >= 0) return h[x];
    int best = 0;
    for (Element c : p.lower_covers(x)) best = std::max(best, visit(c) + 1);
    return h[x] = best;
  };
  for (Element x = 0; x < n; ++x) visit(x);
  return h;
}

int height(const Poset& p, Element x) {
  if (x >= p.size()) throw RangeError("element out of range");
  return heights(p)[x];
}

int length(const Poset& p) {
  auto t = top(p);
  if (!t || !bottom(p)) throw UnboundedError("length needs a bounded poset");
  return height(p, *t);
}

std::vector<Chain> maximal_chains_to_top(const Poset& p, Element a) {
  auto t = top(p);
  if (!t) throw NoTopError("maximal chains to the top need a top element");
  if (a >= p.size()) throw RangeError("element out of range");
  std::vector<Chain> out;
  Chain current{{a}};
  std::function<void(Element)> extend = [&](Element x) {
    if (x == *t) {
      out.push_back(current);
      return;
    }
    for (Element y : p.upper_covers(x)) {
      current.elements.push_back(y);
      extend(y);
      current.elements.pop_back();
    }
  };
  extend(a);
  return out;
}

Verdict has_lu_covering(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    const ElementSet above = p.upper_covers(x);
    for (Element y : above) {
      for (Element z : above) {
        if (!p.incomparable(y, z)) continue;
        bool found = false;
        for (Element u : p.upper_covers(y)) {
          if (p.covers(z, u)) {
            found = true;
            break;
          }
        }
        if (!found) return Verdict::fail({x, y, z});
      }
    }
  }
  return Verdict::pass();
}

bool is_convex(const Poset& p, ElementSet s) {
  for (Element x : s) {
    for (Element z : s) {
      if (!p.leq(x, z)) continue;
      if (!(p.up_set(x) & p.down_set(z)).subset_of(s)) return false;
    }
  }
  return true;
}

}  // namespace lambdalat
