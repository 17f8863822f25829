// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lambdalat/checkers.hpp"
#include "lambdalat/cli.hpp"
#include "lambdalat/fixtures.hpp"
#include "lambdalat/lambda_lattice.hpp"
#include "lambdalat/search.hpp"
#include "oracles.hpp"

namespace lambdalat {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Element at(const LambdaLattice& ll, const char* label) { return ll.poset().find(label).value(); }

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Outcome summary_table() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = run({"table"}, out, err);
  const long long elapsed = ms_since(start);
  const std::string expected =
      "SM   WLCC LCC  instances\n"
      "yes  yes  yes  FIG3, FIG4\n"
      "yes  yes  no   ACUTE-FIG3\n"
      "yes  no   no   FIG5\n"
      "no   yes  yes  FIG2\n"
      "no   yes  no   FIG2-VARIANT\n"
      "no   no   no   FIG6\n";
  o.require(code == kExitOk, "exit code " + std::to_string(code));
  o.require(out.str() == expected, "table rows differ:\n" + out.str());
  o.require(elapsed < 1000, "took " + std::to_string(elapsed) + " ms");
  o.detail = o.pass ? "six rows exact, " + std::to_string(elapsed) + " ms" : o.detail;
  return o;
}

Outcome witnesses() {
  Outcome o;
  {
    // FIG2: (a∨c)∧d = e∧d = b ≠ a, with c the only u in (d∧c, c].
    const LambdaLattice& ll = fixture("FIG2").lattice;
    const Poset& p = ll.poset();
    const Element a = at(ll, "a"), b = at(ll, "b"), c = at(ll, "c"), d = at(ll, "d"), e = at(ll, "e");
    const Verdict v = is_semimodular(ll);
    o.require(!v.holds && v.witness == std::vector<Element>{d, c, a}, "FIG2 SM witness");
    const ElementSet candidates = (p.up_set(ll.meet(d, c)) & p.down_set(c)) - ElementSet::single(ll.meet(d, c));
    o.require(candidates == ElementSet::single(c), "FIG2 candidate set");
    o.require(ll.join_table()(a, c) == e && ll.meet_table()(e, d) == b && b != a, "FIG2 (a∨c)∧d");
  }
  {
    // FIG2-VARIANT: b∧a = 0 ≺ b, a is not covered by 1 = b∨a.
    const LambdaLattice& ll = fixture("FIG2-VARIANT").lattice;
    const Poset& p = ll.poset();
    const Element a = at(ll, "a"), b = at(ll, "b");
    const Verdict v = satisfies_lcc(ll);
    const bool same_pair = v.witness == std::vector<Element>{a, b} || v.witness == std::vector<Element>{b, a};
    o.require(!v.holds && same_pair, "FIG2-VARIANT LCC witness");
    o.require(ll.meet_table()(b, a) == at(ll, "0") && p.covers(ll.meet_table()(b, a), b), "FIG2-VARIANT b∧a ≺ b");
    o.require(ll.join_table()(b, a) == at(ll, "1") && !p.covers(a, ll.join_table()(b, a)), "FIG2-VARIANT a ⊀ 1");
    o.require(satisfies_wlcc(ll).holds, "FIG2-VARIANT WLCC");
  }
  {
    // FIG5: b∧c = a ≺ c ≺ 1 = b∨c, b is not covered by 1.
    const LambdaLattice& ll = fixture("FIG5").lattice;
    const Poset& p = ll.poset();
    const Element a = at(ll, "a"), b = at(ll, "b"), c = at(ll, "c"), one = at(ll, "1");
    const Verdict v = satisfies_wlcc(ll);
    o.require(!v.holds && v.witness == std::vector<Element>{c, b}, "FIG5 WLCC witness");
    o.require(ll.meet_table()(b, c) == a && p.covers(a, c), "FIG5 b∧c = a ≺ c");
    o.require(ll.join_table()(b, c) == one && p.covers(c, one) && !p.covers(b, one), "FIG5 c ≺ 1, b ⊀ 1");
  }
  {
    // FIG6: (a∨c)∧b = d∧b = b ≠ a; c∧a = 0 ≺ c ≺ d = c∨a, a ⊀ d.
    const LambdaLattice& ll = fixture("FIG6").lattice;
    const Poset& p = ll.poset();
    const Element zero = at(ll, "0"), a = at(ll, "a"), b = at(ll, "b"), c = at(ll, "c"), d = at(ll, "d");
    const PropertyReport r = classify(ll);
    o.require(!r.semimodular.holds && r.semimodular.witness == std::vector<Element>{b, c, a}, "FIG6 SM witness");
    o.require(ll.meet_table()(b, c) == zero && p.lt(zero, a) && p.lt(a, b), "FIG6 b∧c = 0 < a < b");
    o.require(ll.join_table()(a, c) == d && ll.meet_table()(d, b) == b && b != a, "FIG6 (a∨c)∧b");
    o.require(!r.wlcc.holds && r.wlcc.witness == std::vector<Element>{c, a}, "FIG6 WLCC witness");
    o.require(ll.meet_table()(c, a) == zero && p.covers(zero, c) && p.covers(c, ll.join_table()(c, a)) &&
                  !p.covers(a, ll.join_table()(c, a)),
              "FIG6 c∧a ≺ c ≺ d, a ⊀ d");
  }
  if (o.pass) o.detail = "FIG2, FIG2-VARIANT, FIG5, FIG6 witnesses re-evaluated through the tables";
  return o;
}

template <class Visit>
void each_completion(std::size_t max_n, Visit visit) {
  EnumerationFilter f;
  f.require_directed = true;
  f.max_elements = max_n;
  for_each_poset(f, [&](const Poset& p) {
    CompletionEnumerator it(p);
    while (auto ll = it.next()) visit(*ll);
  });
}

Outcome construction_soundness() {
  Outcome o;
  std::uint64_t total = 0, failures = 0;
  const auto start = Clock::now();
  each_completion(5, [&](const LambdaLattice& ll) {
    ++total;
    if (!check_axioms(ll.join_table(), ll.meet_table()).all_pass()) ++failures;
  });
  o.require(failures == 0, std::to_string(failures) + " completions fail the axioms");
  o.require(total > 0, "no completions");
  if (o.pass) {
    o.detail = std::to_string(total) + " completions with n <= 5, 0 failures, " + std::to_string(ms_since(start)) + " ms";
  }
  return o;
}

Outcome theorem_suite() {
  Outcome o;
  std::ostringstream summary;
  for (TheoremId id : {TheoremId::TH1, TheoremId::TH2, TheoremId::LEM1, TheoremId::LEM2, TheoremId::HEIGHT,
                       TheoremId::CHAINS, TheoremId::ACUTE, TheoremId::COR1, TheoremId::MONO, TheoremId::MODLAT}) {
    VerifyOptions options;
    options.filter.max_elements = theorem_info(id).over_completions ? 5 : 6;
    const VerificationResult r = verify(id, options);
    o.require(r.clean(), std::string(to_string(id)) + " has " + std::to_string(r.counterexample_count) +
                             " counterexamples");
    o.require(r.posets_skipped == 0, std::string(to_string(id)) + " skipped posets");
    summary << (summary.tellp() ? ", " : "") << to_string(id) << "(n<=" << options.filter.max_elements << ")";
  }
  if (o.pass) o.detail = "clean: " + summary.str();
  return o;
}

bool contains_isomorph(const VerificationResult& r, const LambdaLattice& target) {
  for (const Counterexample& cx : r.counterexamples) {
    if (cx.lattice && cx.lattice->size() == target.size() && find_isomorphism(*cx.lattice, target)) return true;
  }
  return false;
}

Outcome mutation_sensitivity() {
  Outcome o;
  VerifyOptions options;
  options.filter.max_elements = 6;
  options.keep_counterexamples = 1'000'000;

  const VerificationResult no_cond3 = verify(TheoremId::TH1_NO_COND3, options);
  o.require(!no_cond3.clean(), "TH1 without (3) is clean");
  o.require(contains_isomorph(no_cond3, fixture("FIG5").lattice), "no isomorph of FIG5 among counterexamples");
  o.require(no_cond3.counterexample() && revalidate(TheoremId::TH1_NO_COND3, *no_cond3.counterexample()),
            "TH1 without (3) counterexample does not revalidate");

  const VerificationResult lcc = verify(TheoremId::TH1_LCC, options);
  o.require(!lcc.clean(), "TH1 with LCC conclusion is clean");
  o.require(contains_isomorph(lcc, fixture("ACUTE-FIG3").lattice), "no isomorph of ACUTE-FIG3 among counterexamples");
  o.require(lcc.counterexample() && revalidate(TheoremId::TH1_LCC, *lcc.counterexample()),
            "TH1 with LCC counterexample does not revalidate");
  if (o.pass) {
    o.detail = "TH1_NO_COND3: " + std::to_string(no_cond3.counterexample_count) +
               " counterexamples incl. FIG5; TH1_LCC: " + std::to_string(lcc.counterexample_count) +
               " incl. ACUTE-FIG3 (n <= 6)";
  }
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  const std::uint64_t known[] = {1, 3, 19, 219};
  std::ostringstream counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    EnumerationFilter f;
    f.min_elements = n;
    f.max_elements = n;
    const std::uint64_t generated = count_posets(f);
    const std::uint64_t naive = oracle::count_posets_naive(n);
    o.require(generated == naive && naive == known[n - 1],
              "n=" + std::to_string(n) + ": generator " + std::to_string(generated) + ", oracle " +
                  std::to_string(naive));
    counts << (n > 1 ? ", " : "") << generated;
  }
  if (o.pass) o.detail = "counts " + counts.str() + " agree with the relation-filter oracle";
  return o;
}

Outcome structural_equivalences() {
  Outcome o;
  std::uint64_t total = 0;
  std::uint64_t mono = 0, modular = 0, distributive = 0, covering = 0, lemma1 = 0;
  try {
    each_completion(5, [&](const LambdaLattice& ll) {
      ++total;
      const bool lattice = is_lattice(ll);
      if (is_monotone(ll) != lattice) ++mono;
      if (is_modular(ll) && !lattice) ++modular;
      if (is_distributive(ll) && !lattice) ++distributive;
      if (satisfies_lcc(ll).holds && !satisfies_wlcc(ll).holds) ++covering;
      if (lemma1_refutes(ll) && is_semimodular(ll).holds) ++lemma1;
    });
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  o.require(mono == 0, std::to_string(mono) + " monotone/lattice mismatches");
  o.require(modular == 0, std::to_string(modular) + " modular non-lattices");
  o.require(distributive == 0, std::to_string(distributive) + " distributive non-lattices");
  o.require(covering == 0, std::to_string(covering) + " LCC without WLCC");
  o.require(lemma1 == 0, std::to_string(lemma1) + " semimodular with a Lemma 1 quadruple");
  if (o.pass) o.detail = std::to_string(total) + " instances with n <= 5, all five relations hold";
  return o;
}

Outcome chain_theorem() {
  Outcome o;
  const Poset& fig2 = fixture("FIG2").lattice.poset();
  o.require(has_lu_covering(fig2).holds, "FIG2 poset fails LU-covering");
  for (Element x = 0; x < fig2.size(); ++x) {
    std::set<std::size_t> lengths;
    for (const Chain& c : maximal_chains_to_top(fig2, x)) lengths.insert(c.length());
    o.require(lengths.size() == 1, "FIG2 unequal chains from " + fig2.label(x));
  }
  const Poset& fig5 = fixture("FIG5").lattice.poset();
  std::set<std::size_t> lengths;
  for (const Chain& c : maximal_chains_to_top(fig5, fig5.find("0").value())) lengths.insert(c.length());
  o.require(lengths == std::set<std::size_t>{3, 4}, "FIG5 chain lengths from 0");
  o.require(!has_lu_covering(fig5).holds, "FIG5 poset passes LU-covering");
  if (o.pass) o.detail = "FIG2 LU and equal lengths from all 7 elements; FIG5 lengths {3, 4}, LU fails";
  return o;
}

}  // namespace
}  // namespace lambdalat

int main() {
  using namespace lambdalat;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"summary table", summary_table},
      {"witness fidelity", witnesses},
      {"construction soundness", construction_soundness},
      {"theorem suite", theorem_suite},
      {"mutation sensitivity", mutation_sensitivity},
      {"enumeration oracle agreement", enumeration_oracle},
      {"structural equivalences", structural_equivalences},
      {"chain theorem", chain_theorem},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
