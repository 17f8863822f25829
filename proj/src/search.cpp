#include "lambdalat/search.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "lambdalat/errors.hpp"
#include "lambdalat/instance_io.hpp"

namespace lambdalat {

namespace {

using Mask = ElementSet::Mask;

bool passes(const EnumerationFilter& f, const Poset& p) {
  if (f.require_directed && !is_directed(p)) return false;
  if (f.require_bounded && !bounds(p)) return false;
  if (f.unlabeled && !is_canonical(p)) return false;
  return true;
}

class PosetExtender {
 public:
  PosetExtender(std::size_t n, const EnumerationFilter& filter, const std::function<void(const Poset&)>& visit)
      : n_(n), filter_(filter), visit_(visit), up_(n, 0) {}

  void run() {
    up_[0] = 1;
    extend(1);
  }

 private:
  void extend(std::size_t k) {
    if (k == n_) {
      std::vector<ElementSet> rows;
      rows.reserve(n_);
      for (Mask m : up_) rows.emplace_back(m);
      Poset p(std::move(rows));
      if (passes(filter_, p)) visit_(p);
      return;
    }
    const Mask prefix = (Mask{1} << k) - 1;
    for (Mask down = 0; down <= prefix; ++down) {
      if (!is_down_set(down, k)) continue;
      Mask allowed = prefix & ~down;
      for (Mask rest = down; rest != 0; rest &= rest - 1) allowed &= up_[std::countr_zero(rest)];
      // Every submask of `allowed`, including the empty one.
      Mask upper = allowed;
      while (true) {
        if (is_up_set(upper)) {
          for (Mask rest = down; rest != 0; rest &= rest - 1) up_[std::countr_zero(rest)] |= Mask{1} << k;
          up_[k] = upper | (Mask{1} << k);
          extend(k + 1);
          for (Mask rest = down; rest != 0; rest &= rest - 1) up_[std::countr_zero(rest)] &= ~(Mask{1} << k);
          up_[k] = 0;
        }
        if (upper == 0) break;
        upper = (upper - 1) & allowed;
      }
    }
  }

  // No element outside the set lies below one inside it.
  bool is_down_set(Mask s, std::size_t k) const {
    for (std::size_t x = 0; x < k; ++x) {
      if (!((s >> x) & 1U) && (up_[x] & s) != 0) return false;
    }
    return true;
  }

  bool is_up_set(Mask s) const {
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      if ((up_[std::countr_zero(rest)] & ~s) != 0) return false;
    }
    return true;
  }

  std::size_t n_;
  const EnumerationFilter& filter_;
  const std::function<void(const Poset&)>& visit_;
  std::vector<Mask> up_;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::string tuple_text(const Poset& p, const std::vector<Element>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += p.label(w[i]);
  }
  return out + ")";
}

bool preserves_order(const Poset& a, const Poset& b, const std::vector<Element>& map) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
    }
  }
  return true;
}

template <class Accept>
std::optional<std::vector<Element>> search_permutations(std::size_t n, Accept accept) {
  std::vector<Element> map(n);
  std::iota(map.begin(), map.end(), Element{0});
  do {
    if (accept(map)) return map;
  } while (std::next_permutation(map.begin(), map.end()));
  return std::nullopt;
}

const std::vector<TheoremInfo> kTheorems = {
    {TheoremId::TH1, "TH1", "semimodular and (3) imply the weak lower covering condition", true, false},
    {TheoremId::TH2, "TH2", "semimodular, (4), (5) and DCC imply the lower covering condition", true, false},
    {TheoremId::LEM1, "LEM1", "a quadruple with all joins c∨e = d∨f rules out semimodularity", true, false},
    {TheoremId::LEM2, "LEM2", "convex sub-λ-lattices of a semimodular λ-lattice are semimodular", true, false},
    {TheoremId::HEIGHT, "HEIGHT", "LCC implies h(a∨b) - h(a∧b) <= |h(a) - h(b)| + 2 on qualifying pairs", true, false},
    {TheoremId::HEIGHT_SHORTEST, "HEIGHT_SHORTEST",
     "LCC implies the height inequality with heights measured along shortest maximal chains", true, false},
    {TheoremId::CHAINS, "CHAINS", "LU-covering with a top implies equal-length maximal chains to the top", false, false},
    {TheoremId::ACUTE, "ACUTE", "acute completion has LCC iff atom condition iff one of the three clauses", false, false},
    {TheoremId::COR1, "COR1", "acute completion has LCC iff |P| = 1 or |A| = 1 or P is isomorphic to M_n", false,
     false},
    {TheoremId::MONO, "MONO", "both operations monotone iff lattice", true, false},
    {TheoremId::MODLAT, "MODLAT", "modular or distributive implies lattice", true, false},
    {TheoremId::SMLAT, "SMLAT", "a semimodular lattice satisfies the lower covering condition", true, false},
    {TheoremId::TH1_NO_COND3, "TH1_NO_COND3", "semimodular implies the weak lower covering condition", true, true},
    {TheoremId::TH1_LCC, "TH1_LCC", "semimodular and (3) imply the lower covering condition", true, true},
};

struct ShardResult {
  std::uint64_t posets = 0;
  std::uint64_t lattices = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> kept;
};

void keep_least(std::vector<Counterexample>& kept, Counterexample cx, std::size_t limit) {
  if (limit == 0) return;
  auto pos = std::lower_bound(kept.begin(), kept.end(), cx,
                              [](const Counterexample& a, const Counterexample& b) { return a.order_key() < b.order_key(); });
  if (kept.size() >= limit && pos == kept.end()) return;
  kept.insert(pos, std::move(cx));
  if (kept.size() > limit) kept.pop_back();
}

}  // namespace

void for_each_poset(const EnumerationFilter& filter, const std::function<void(const Poset&)>& visit) {
  if (filter.max_elements > kMaxEnumerationElements) {
    throw BudgetError("enumeration is limited to " + std::to_string(kMaxEnumerationElements) + " elements",
                      filter.max_elements);
  }
  for (std::size_t n = std::max<std::size_t>(filter.min_elements, 1); n <= filter.max_elements; ++n) {
    PosetExtender(n, filter, visit).run();
  }
}

std::vector<Poset> enumerate_posets(const EnumerationFilter& filter) {
  std::vector<Poset> out;
  for_each_poset(filter, [&](const Poset& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_posets(const EnumerationFilter& filter) {
  std::uint64_t count = 0;
  for_each_poset(filter, [&](const Poset&) { ++count; });
  return count;
}

std::uint64_t completion_count(const Poset& p) {
  std::uint64_t total = 1;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      total = saturating_mul(total, upper_bounds(p, x, y).size());
      total = saturating_mul(total, lower_bounds(p, x, y).size());
    }
  }
  return total;
}

CompletionEnumerator::CompletionEnumerator(const Poset& p, std::uint64_t budget) : poset_(p) {
  if (!is_directed(p)) throw NotDirectedError("completions need a directed poset");
  total_ = completion_count(p);
  if (total_ > budget) {
    throw BudgetError("poset has " + std::to_string(total_) + " completions, budget is " + std::to_string(budget),
                      total_);
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      slots_.push_back({x, y, true, upper_bounds(p, x, y).to_vector()});
      slots_.push_back({x, y, false, lower_bounds(p, x, y).to_vector()});
    }
  }
  digits_.assign(slots_.size(), 0);
}

std::optional<LambdaLattice> CompletionEnumerator::next() {
  if (done_) return std::nullopt;
  ChoiceSpec choice;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const Slot& s = slots_[i];
    if (s.is_join) {
      choice.set_join(s.x, s.y, s.values[digits_[i]]);
    } else {
      choice.set_meet(s.x, s.y, s.values[digits_[i]]);
    }
  }
  LambdaLattice ll = from_choice(poset_, choice);
  std::size_t i = slots_.size();
  while (true) {
    if (i == 0) {
      done_ = true;
      break;
    }
    --i;
    if (++digits_[i] < slots_[i].values.size()) break;
    digits_[i] = 0;
  }
  return ll;
}

std::vector<LambdaLattice> enumerate_completions(const Poset& p, std::uint64_t budget) {
  CompletionEnumerator it(p, budget);
  std::vector<LambdaLattice> out;
  while (auto ll = it.next()) out.push_back(std::move(*ll));
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  return search_permutations(a.size(), [&](const std::vector<Element>& map) { return preserves_order(a, b, map); });
}

std::optional<std::vector<Element>> find_isomorphism(const LambdaLattice& a, const LambdaLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  return search_permutations(a.size(), [&](const std::vector<Element>& map) {
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        if (map[a.join(x, y)] != b.join(map[x], map[y])) return false;
        if (map[a.meet(x, y)] != b.meet(map[x], map[y])) return false;
      }
    }
    return true;
  });
}

bool is_canonical(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Mask> identity(n);
  for (Element x = 0; x < n; ++x) identity[x] = p.up_set(x).bits();
  // perm[i] is the old element placed at position i.
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (Element i = 0; i < n; ++i) {
      Mask row = 0;
      for (Element j = 0; j < n; ++j) {
        if (p.leq(perm[i], perm[j])) row |= Mask{1} << j;
      }
      if (row < identity[i]) return false;
      if (row > identity[i]) break;
    }
  }
  return true;
}

const std::vector<TheoremInfo>& theorem_catalog() { return kTheorems; }

const TheoremInfo& theorem_info(TheoremId id) {
  for (const TheoremInfo& t : kTheorems) {
    if (t.id == id) return t;
  }
  throw UnknownTheoremError("unknown theorem id");
}

std::string_view to_string(TheoremId id) { return theorem_info(id).name; }

TheoremId parse_theorem_id(std::string_view name) {
  for (const TheoremInfo& t : kTheorems) {
    if (t.name == name) return t.id;
  }
  throw UnknownTheoremError("unknown theorem `" + std::string(name) + "`");
}

std::optional<std::string> check_theorem(TheoremId id, const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  switch (id) {
    case TheoremId::TH1:
    case TheoremId::TH1_NO_COND3:
    case TheoremId::TH1_LCC: {
      if (!is_semimodular(ll)) return std::nullopt;
      if (id != TheoremId::TH1_NO_COND3 && !cond3(ll)) return std::nullopt;
      const Verdict v = id == TheoremId::TH1_LCC ? satisfies_lcc(ll) : satisfies_wlcc(ll);
      if (v) return std::nullopt;
      return std::string(id == TheoremId::TH1_LCC ? "LCC" : "WLCC") + " fails at " + tuple_text(p, v.witness);
    }
    case TheoremId::TH2: {
      if (!is_semimodular(ll) || !cond4(ll) || !cond5(ll) || !dcc(ll)) return std::nullopt;
      const Verdict v = satisfies_lcc(ll);
      if (v) return std::nullopt;
      return "LCC fails at " + tuple_text(p, v.witness);
    }
    case TheoremId::LEM1: {
      auto quad = lemma1_refutes(ll);
      if (!quad || !is_semimodular(ll)) return std::nullopt;
      return "semimodular although " + tuple_text(p, *quad) + " has all joins equal";
    }
    case TheoremId::LEM2: {
      if (!is_semimodular(ll)) return std::nullopt;
      for (ElementSet s : convex_closed_subsets(ll)) {
        const LambdaLattice sub = restrict_to(ll, s);
        const Verdict v = is_semimodular(sub);
        if (!v) return "convex sub-λ-lattice " + tuple_text(p, s.to_vector()) + " fails at " + tuple_text(sub.poset(), v.witness);
      }
      return std::nullopt;
    }
    case TheoremId::HEIGHT:
    case TheoremId::HEIGHT_SHORTEST: {
      if (!satisfies_lcc(ll)) return std::nullopt;
      const Verdict v = height_inequality(
          ll, id == TheoremId::HEIGHT ? HeightMeasure::LongestChain : HeightMeasure::ShortestMaximalChain);
      if (v) return std::nullopt;
      return "height inequality fails at " + tuple_text(p, v.witness) + ": " + v.note;
    }
    case TheoremId::MONO: {
      const bool mono = is_monotone(ll);
      const bool lat = is_lattice(ll);
      if (mono == lat) return std::nullopt;
      return mono ? std::string("monotone but not a lattice") : std::string("lattice but not monotone");
    }
    case TheoremId::MODLAT: {
      if (is_lattice(ll)) return std::nullopt;
      if (is_modular(ll)) return std::string("modular but not a lattice");
      if (is_distributive(ll)) return std::string("distributive but not a lattice");
      return std::nullopt;
    }
    case TheoremId::SMLAT: {
      if (!is_lattice(ll) || !is_semimodular(ll)) return std::nullopt;
      const Verdict v = satisfies_lcc(ll);
      if (v) return std::nullopt;
      return "semimodular lattice with LCC failing at " + tuple_text(p, v.witness);
    }
    case TheoremId::CHAINS:
    case TheoremId::ACUTE:
    case TheoremId::COR1:
      break;
  }
  throw Error(std::string(to_string(id)) + " quantifies over posets, not λ-lattices");
}

std::optional<std::string> check_theorem(TheoremId id, const Poset& p) {
  switch (id) {
    case TheoremId::CHAINS: {
      if (!top(p) || !has_lu_covering(p)) return std::nullopt;
      for (Element a = 0; a < p.size(); ++a) {
        const auto chains = maximal_chains_to_top(p, a);
        for (const Chain& c : chains) {
          if (c.length() != chains.front().length()) {
            return "chains from " + p.label(a) + " have lengths " + std::to_string(chains.front().length()) + " and " +
                   std::to_string(c.length());
          }
        }
      }
      return std::nullopt;
    }
    case TheoremId::ACUTE: {
      if (!bounds(p)) return std::nullopt;
      const bool clause = acute_characterization(p).clause != AcuteClause::Fails;
      const bool lcc = satisfies_lcc(acute(p)).holds;
      const bool atoms_ok = acute_atom_condition(p).holds;
      if (clause == lcc && lcc == atoms_ok) return std::nullopt;
      return std::string("clause ") + (clause ? "holds" : "fails") + ", acute LCC " + (lcc ? "holds" : "fails") +
             ", atom condition " + (atoms_ok ? "holds" : "fails");
    }
    case TheoremId::COR1: {
      if (!bounds(p)) return std::nullopt;
      const bool lcc = satisfies_lcc(acute(p)).holds;
      bool listed = p.size() == 1 || atoms(p).size() == 1;
      if (!listed && p.size() >= 4) listed = find_isomorphism(p, mk_poset(p.size() - 2)).has_value();
      if (lcc == listed) return std::nullopt;
      return std::string("acute LCC ") + (lcc ? "holds" : "fails") + " but the listed cases " +
             (listed ? "apply" : "do not apply");
    }
    default:
      break;
  }
  throw Error(std::string(to_string(id)) + " quantifies over λ-lattices, not posets");
}

std::string Counterexample::instance_text() const {
  return lattice ? render_instance(*lattice, "counterexample") : render_poset(poset, "counterexample");
}

std::string VerificationResult::scope() const {
  std::ostringstream out;
  out << "exhaustive over labeled " << (theorem_info(theorem).over_completions ? "completions of directed posets" : "posets")
      << " with at most " << max_elements << " elements; evidence at this size, not a proof";
  if (posets_skipped) out << "; " << posets_skipped << " posets skipped over the completion budget";
  return out.str();
}

VerificationResult verify(TheoremId id, const VerifyOptions& options) {
  const TheoremInfo& info = theorem_info(id);
  EnumerationFilter filter = options.filter;
  if (info.over_completions) filter.require_directed = true;
  if (id == TheoremId::ACUTE || id == TheoremId::COR1) filter.require_bounded = true;
  if (filter.max_elements > kMaxEnumerationElements) {
    throw BudgetError("verification is limited to " + std::to_string(kMaxEnumerationElements) + " elements",
                      filter.max_elements);
  }

  const auto start = std::chrono::steady_clock::now();
  const unsigned shards = std::max(1U, options.threads);
  std::vector<ShardResult> results(shards);

  auto run_shard = [&](unsigned shard) {
    ShardResult& r = results[shard];
    std::uint64_t ordinal = 0;
    for_each_poset(filter, [&](const Poset& p) {
      const std::uint64_t mine = ordinal++;
      if (mine % shards != shard) return;
      ++r.posets;
      if (!info.over_completions) {
        if (auto why = check_theorem(id, p)) {
          ++r.failures;
          keep_least(r.kept, Counterexample{mine, 0, p, std::nullopt, *why}, options.keep_counterexamples);
        }
        return;
      }
      if (completion_count(p) > options.budget) {
        ++r.skipped;
        return;
      }
      CompletionEnumerator completions(p, options.budget);
      std::uint64_t index = 0;
      while (auto ll = completions.next()) {
        ++r.lattices;
        if (auto why = check_theorem(id, *ll)) {
          ++r.failures;
          keep_least(r.kept, Counterexample{mine, index, p, std::move(*ll), *why}, options.keep_counterexamples);
        }
        ++index;
      }
    });
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(run_shard, s);
    for (auto& t : pool) t.join();
  }

  VerificationResult out;
  out.theorem = id;
  out.max_elements = filter.max_elements;
  for (ShardResult& r : results) {
    out.posets_checked += r.posets;
    out.lattices_checked += r.lattices;
    out.posets_skipped += r.skipped;
    out.counterexample_count += r.failures;
    for (Counterexample& cx : r.kept) keep_least(out.counterexamples, std::move(cx), options.keep_counterexamples);
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

bool revalidate(TheoremId id, const Counterexample& cx) {
  const ParsedInstance parsed = parse_instance(cx.instance_text());
  if (theorem_info(id).over_completions) {
    return parsed.lattice && check_theorem(id, *parsed.lattice).has_value();
  }
  return check_theorem(id, parsed.poset).has_value();
}

std::set<ClassTriple> independence_table(const EnumerationFilter& filter, std::uint64_t budget) {
  EnumerationFilter f = filter;
  f.require_directed = true;
  std::set<ClassTriple> out;
  for_each_poset(f, [&](const Poset& p) {
    if (completion_count(p) > budget) {
      throw BudgetError("poset exceeds the completion budget", completion_count(p));
    }
    CompletionEnumerator it(p, budget);
    while (auto ll = it.next()) {
      out.insert({is_semimodular(*ll).holds, satisfies_wlcc(*ll).holds, satisfies_lcc(*ll).holds});
    }
  });
  return out;
}

std::set<ClassTriple> independence_table(std::span<const LambdaLattice> instances) {
  std::set<ClassTriple> out;
  for (const LambdaLattice& ll : instances) {
    out.insert({is_semimodular(ll).holds, satisfies_wlcc(ll).holds, satisfies_lcc(ll).holds});
  }
  return out;
}

}  // namespace lambdalat
