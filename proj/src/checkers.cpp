#include "lambdalat/checkers.hpp"

#include <cstdlib>
#include <string>

#include "lambdalat/errors.hpp"

namespace lambdalat {

namespace {

// Elements strictly above lo and at most hi.
ElementSet half_open(const Poset& p, Element lo, Element hi) {
  return (p.up_set(lo) & p.down_set(hi)) - ElementSet::single(lo);
}

// Elements strictly between lo and hi.
ElementSet open_interval(const Poset& p, Element lo, Element hi) {
  return half_open(p, lo, hi) - ElementSet::single(hi);
}

Verdict covering_condition(const LambdaLattice& ll, bool weak) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element m = ll.meet(x, y);
      const Element j = ll.join(x, y);
      if (!p.covers(m, x)) continue;
      if (weak && !p.covers(x, j)) continue;
      if (!p.covers(y, j)) return Verdict::fail({x, y});
    }
  }
  return Verdict::pass();
}

Verdict meet_order_condition(const LambdaLattice& ll, bool cover_only) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!p.incomparable(x, z)) continue;
        if (cover_only ? !p.covers(y, z) : !p.lt(y, z)) continue;
        if (!p.leq(ll.meet(x, y), ll.meet(x, z))) return Verdict::fail({x, y, z});
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_semimodular(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      const Element m = ll.meet(x, y);
      const ElementSet candidates = half_open(p, m, y);
      for (Element z : open_interval(p, m, x)) {
        bool found = false;
        for (Element u : candidates) {
          if (ll.meet(ll.join(z, u), x) == z) {
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

std::optional<std::vector<Element>> lemma1_refutes(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      const Element m = ll.meet(x, y);
      const ElementSet between = open_interval(p, m, x);
      const ElementSet candidates = half_open(p, m, y);
      for (Element c : between) {
        for (Element d : between) {
          if (c == d) continue;
          bool all_equal = true;
          for (Element e : candidates) {
            for (Element f : candidates) {
              if (ll.join(c, e) != ll.join(d, f)) {
                all_equal = false;
                break;
              }
            }
            if (!all_equal) break;
          }
          if (all_equal) return std::vector<Element>{x, y, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

Verdict satisfies_wlcc(const LambdaLattice& ll) { return covering_condition(ll, true); }

Verdict satisfies_lcc(const LambdaLattice& ll) { return covering_condition(ll, false); }

Verdict cond3(const LambdaLattice& ll) { return meet_order_condition(ll, false); }

Verdict cond4(const LambdaLattice& ll) { return meet_order_condition(ll, true); }

Verdict cond5(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      for (Element z : p.up_set(x)) {
        if (z == x || !p.covers(y, z)) continue;
        if (p.lt(z, ll.join(x, y))) return Verdict::fail({x, y, z});
      }
    }
  }
  return Verdict::pass();
}

Verdict dcc(const LambdaLattice& ll) {
  return Verdict::pass("finite carrier of " + std::to_string(ll.size()) + " elements");
}

Verdict height_inequality(const LambdaLattice& ll, HeightMeasure measure) {
  const Poset& p = ll.poset();
  if (!bounds(p)) throw UnboundedError("height inequality needs a bounded λ-lattice");
  const std::vector<int> h = heights(p, measure);
  const std::size_t n = p.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element m = ll.meet(a, b);
      const Element j = ll.join(a, b);
      if (!(p.comparable(a, b) || p.covers(m, a) || p.covers(m, b))) continue;
      if (h[j] - h[m] > std::abs(h[a] - h[b]) + 2) {
        return Verdict::fail({a, b}, "h(a)=" + std::to_string(h[a]) + " h(b)=" + std::to_string(h[b]) +
                                         " h(a∨b)=" + std::to_string(h[j]) + " h(a∧b)=" + std::to_string(h[m]));
      }
    }
  }
  return Verdict::pass();
}

Verdict monotone_wedge(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.up_set(x)) {
      for (Element z = 0; z < n; ++z) {
        if (!p.leq(ll.meet(x, z), ll.meet(y, z))) return Verdict::fail({x, y, z});
      }
    }
  }
  return Verdict::pass();
}

const char* to_string(AcuteClause clause) {
  switch (clause) {
    case AcuteClause::NoAtoms: return "NoAtoms";
    case AcuteClause::UniqueAtomBelowAll: return "UniqueAtomBelowAll";
    case AcuteClause::IsoToMk: return "IsoToMk";
    case AcuteClause::Fails: return "Fails";
  }
  return "Fails";
}

AcuteCharacterization acute_characterization(const Poset& p) {
  auto b = bounds(p);
  if (!b) throw UnboundedError("acute characterization needs a bounded poset");
  AcuteCharacterization out;
  out.atoms = atoms(p);
  out.coatoms = coatoms(p);
  const ElementSet nonzero = p.carrier() - ElementSet::single(b->bottom);

  if (out.atoms.empty()) {
    out.clause = AcuteClause::NoAtoms;
  } else if (out.atoms.size() == 1 && nonzero.subset_of(p.up_set(out.atoms.front()))) {
    out.clause = AcuteClause::UniqueAtomBelowAll;
  } else if (out.atoms.size() > 1 && out.atoms == out.coatoms && p.size() == out.atoms.size() + 2 &&
             length(p) == 2) {
    out.clause = AcuteClause::IsoToMk;
    out.k = out.atoms.size();
  }
  return out;
}

Verdict acute_atom_condition(const Poset& p) {
  const ElementSet a = atoms(p);
  const ElementSet c = coatoms(p);
  for (Element x : a) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.incomparable(x, y) && !c.contains(y)) return Verdict::fail({x, y});
    }
  }
  return Verdict::pass();
}

Poset mk_poset(std::size_t k) {
  if (k == 0 || k + 2 > kMaxElements) throw RangeError("M_k needs 1 <= k <= " + std::to_string(kMaxElements - 2));
  const std::size_t n = k + 2;
  std::vector<std::pair<Element, Element>> covers;
  std::vector<std::string> labels{"0"};
  for (Element i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, n - 1);
    labels.push_back("a" + std::to_string(i));
  }
  labels.emplace_back("1");
  return poset_from_covers(n, covers, std::move(labels));
}

PropertyReport classify(const LambdaLattice& ll) {
  PropertyReport r;
  r.semimodular = is_semimodular(ll);
  r.wlcc = satisfies_wlcc(ll);
  r.lcc = satisfies_lcc(ll);
  r.cond3 = cond3(ll);
  r.cond4 = cond4(ll);
  r.cond5 = cond5(ll);
  r.dcc = dcc(ll);
  r.lu_covering = has_lu_covering(ll.poset());
  return r;
}

}  // namespace lambdalat
