#include "lambdalat/lambda_lattice.hpp"

#include <string>

#include "lambdalat/errors.hpp"

namespace lambdalat {

namespace {

std::string pair_text(const Poset& p, Element x, Element y) { return "(" + p.label(x) + ", " + p.label(y) + ")"; }

void require_total(const OperationTable& t, std::size_t n, const char* name) {
  if (t.size() != n) throw RangeError(std::string(name) + " table has the wrong size");
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (t(x, y) >= n) {
        throw RangeError(std::string(name) + " table entry at (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is out of range");
      }
    }
  }
}

Verdict commutative(const OperationTable& op) {
  const std::size_t n = op.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (op(x, y) != op(y, x)) return Verdict::fail({x, y});
    }
  }
  return Verdict::pass();
}

// x * ((x * y) * z) = (x * y) * z
Verdict weakly_associative(const OperationTable& op) {
  const std::size_t n = op.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const Element rhs = op(op(x, y), z);
        if (op(x, rhs) != rhs) return Verdict::fail({x, y, z});
      }
    }
  }
  return Verdict::pass();
}

// x * (x + y) = x
Verdict absorbs(const OperationTable& outer, const OperationTable& inner) {
  const std::size_t n = outer.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (outer(x, inner(x, y)) != x) return Verdict::fail({x, y});
    }
  }
  return Verdict::pass();
}

}  // namespace

OperationTable::OperationTable(const std::vector<std::vector<Element>>& rows) : n_(rows.size()) {
  cells_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw RangeError("operation table is not square");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

std::optional<Element> ChoiceSpec::join(Element x, Element y) const {
  auto it = joins_.find(key(x, y));
  if (it == joins_.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> ChoiceSpec::meet(Element x, Element y) const {
  auto it = meets_.find(key(x, y));
  if (it == meets_.end()) return std::nullopt;
  return it->second;
}

AxiomReport check_axioms(const OperationTable& join, const OperationTable& meet) {
  const std::size_t n = join.size();
  require_total(join, n, "join");
  require_total(meet, n, "meet");
  AxiomReport report;
  report.join_commutativity = commutative(join);
  report.meet_commutativity = commutative(meet);
  report.join_weak_associativity = weakly_associative(join);
  report.meet_weak_associativity = weakly_associative(meet);
  report.join_absorption = absorbs(join, meet);
  report.meet_absorption = absorbs(meet, join);
  return report;
}

LambdaLattice LambdaLattice::from_tables(OperationTable join, OperationTable meet, std::vector<std::string> labels) {
  const std::size_t n = join.size();
  if (n == 0 || n > kMaxElements) throw RangeError("table size out of range");
  const AxiomReport report = check_axioms(join, meet);
  if (!report.all_pass()) throw AxiomError("tables do not satisfy the λ-lattice identities");
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (join(x, y) == y) up[x].insert(y);
    }
  }
  Poset poset(std::move(up), std::move(labels));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (poset.leq(x, y) != (meet(x, y) == x)) throw AxiomError("join and meet induce different orders");
    }
  }
  return LambdaLattice(std::move(poset), std::move(join), std::move(meet));
}

bool idempotency_holds(const LambdaLattice& ll) {
  for (Element x = 0; x < ll.size(); ++x) {
    if (ll.join(x, x) != x || ll.meet(x, x) != x) return false;
  }
  return true;
}

std::optional<Element> forced_join(const Poset& p, Element x, Element y) {
  const ElementSet least = minimal_elements(p, upper_bounds(p, x, y));
  if (least.size() != 1) return std::nullopt;
  return least.front();
}

std::optional<Element> forced_meet(const Poset& p, Element x, Element y) {
  const ElementSet greatest = maximal_elements(p, lower_bounds(p, x, y));
  if (greatest.size() != 1) return std::nullopt;
  return greatest.front();
}

LambdaLattice from_choice(const Poset& p, const ChoiceSpec& choice) {
  const std::size_t n = p.size();
  if (!is_directed(p)) throw NotDirectedError("poset is not directed");

  auto check_keys = [&](const std::map<ElementPair, Element>& entries, const char* op) {
    for (const auto& [pair, value] : entries) {
      const auto [x, y] = pair;
      if (x >= n || y >= n || value >= n) throw RangeError(std::string(op) + " choice names an element out of range");
      if (!p.incomparable(x, y)) {
        throw BadChoiceError(std::string(op) + " choice given for comparable pair " + pair_text(p, x, y));
      }
    }
  };
  check_keys(choice.joins(), "join");
  check_keys(choice.meets(), "meet");

  OperationTable join(n);
  OperationTable meet(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (p.leq(x, y)) {
        join.set_symmetric(x, y, y);
        meet.set_symmetric(x, y, x);
        continue;
      }
      if (p.leq(y, x)) {
        join.set_symmetric(x, y, x);
        meet.set_symmetric(x, y, y);
        continue;
      }
      auto j = choice.join(x, y);
      if (!j) j = forced_join(p, x, y);
      if (!j) throw IncompleteChoiceError("no join chosen for " + pair_text(p, x, y));
      if (!upper_bounds(p, x, y).contains(*j)) {
        throw BadChoiceError("join " + p.label(*j) + " of " + pair_text(p, x, y) + " is not a common upper bound");
      }
      auto m = choice.meet(x, y);
      if (!m) m = forced_meet(p, x, y);
      if (!m) throw IncompleteChoiceError("no meet chosen for " + pair_text(p, x, y));
      if (!lower_bounds(p, x, y).contains(*m)) {
        throw BadChoiceError("meet " + p.label(*m) + " of " + pair_text(p, x, y) + " is not a common lower bound");
      }
      join.set_symmetric(x, y, *j);
      meet.set_symmetric(x, y, *m);
    }
  }
  return LambdaLattice(p, std::move(join), std::move(meet));
}

LambdaLattice acute(const Poset& p) {
  auto b = bounds(p);
  if (!b) throw UnboundedError("the acute completion needs a bounded poset");
  ChoiceSpec choice;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      choice.set_join(x, y, b->top);
      choice.set_meet(x, y, b->bottom);
    }
  }
  return from_choice(p, choice);
}

ChoiceSpec choice_of(const LambdaLattice& ll) {
  ChoiceSpec choice;
  const Poset& p = ll.poset();
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      choice.set_join(x, y, ll.join(x, y));
      choice.set_meet(x, y, ll.meet(x, y));
    }
  }
  return choice;
}

bool is_lattice(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      // A least upper bound lies below every common upper bound.
      if (!upper_bounds(p, x, y).subset_of(p.up_set(ll.join(x, y)))) return false;
      if (!lower_bounds(p, x, y).subset_of(p.down_set(ll.meet(x, y)))) return false;
    }
  }
  return true;
}

bool is_monotone(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.up_set(x)) {
      for (Element z = 0; z < n; ++z) {
        if (!p.leq(ll.join(x, z), ll.join(y, z))) return false;
        if (!p.leq(ll.meet(x, z), ll.meet(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_modular(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element z : p.up_set(x)) {
      for (Element y = 0; y < n; ++y) {
        if (ll.join(x, ll.meet(y, z)) != ll.meet(ll.join(x, y), z)) return false;
      }
    }
  }
  return true;
}

bool is_distributive(const LambdaLattice& ll) {
  const std::size_t n = ll.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (ll.meet(x, ll.join(y, z)) != ll.join(ll.meet(x, y), ll.meet(x, z))) return false;
        if (ll.join(x, ll.meet(y, z)) != ll.meet(ll.join(x, y), ll.join(x, z))) return false;
      }
    }
  }
  return true;
}

std::vector<ElementSet> convex_closed_subsets(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  std::vector<ElementSet> out;
  const ElementSet::Mask limit = ElementSet::full(n).bits();
  for (ElementSet::Mask bits = 1; bits != 0 && bits <= limit; ++bits) {
    const ElementSet s(bits);
    if (!is_convex(p, s)) continue;
    bool closed = true;
    for (Element x : s) {
      for (Element y : s) {
        if (!s.contains(ll.join(x, y)) || !s.contains(ll.meet(x, y))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

LambdaLattice restrict_to(const LambdaLattice& ll, ElementSet s) {
  if (s.empty() || !s.subset_of(ll.poset().carrier())) throw RangeError("subset is empty or out of range");
  const std::vector<Element> members = s.to_vector();
  std::vector<Element> index(ll.size(), 0);
  for (Element i = 0; i < members.size(); ++i) index[members[i]] = i;

  const std::size_t m = members.size();
  OperationTable join(m);
  OperationTable meet(m);
  std::vector<ElementSet> up(m);
  std::vector<std::string> labels;
  for (Element i = 0; i < m; ++i) {
    labels.push_back(ll.label(members[i]));
    for (Element j = 0; j < m; ++j) {
      const Element jv = ll.join(members[i], members[j]);
      const Element mv = ll.meet(members[i], members[j]);
      if (!s.contains(jv) || !s.contains(mv)) throw RangeError("subset is not closed under the operations");
      join.set(i, j, index[jv]);
      meet.set(i, j, index[mv]);
      if (ll.poset().leq(members[i], members[j])) up[i].insert(j);
    }
  }
  return LambdaLattice(Poset(std::move(up), std::move(labels)), std::move(join), std::move(meet));
}

}  // namespace lambdalat
