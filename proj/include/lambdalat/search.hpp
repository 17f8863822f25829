#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lambdalat/checkers.hpp"
#include "lambdalat/lambda_lattice.hpp"
#include "lambdalat/poset.hpp"

namespace lambdalat {

/// Hard ceiling on enumerated carrier size.
inline constexpr std::size_t kMaxEnumerationElements = 7;
inline constexpr std::uint64_t kDefaultCompletionBudget = 1'000'000;

struct EnumerationFilter {
  bool require_directed = false;
  bool require_bounded = false;
  std::size_t max_elements = 5;
  std::size_t min_elements = 1;
  /// Keep only the representative whose order matrix is lexicographically
  /// least among all relabelings.
  bool unlabeled = false;
};

/// Visits every labeled partial order on min..max elements that passes the
/// filter, by size and then in a fixed extension order. Each poset on n
/// elements is obtained from one on n-1 by adding element n-1 with a chosen
/// down-set and up-set. Throws BudgetError above kMaxEnumerationElements.
void for_each_poset(const EnumerationFilter& filter, const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_posets(const EnumerationFilter& filter);
std::uint64_t count_posets(const EnumerationFilter& filter);

/// Product of |U(x,y)|·|L(x,y)| over incomparable pairs, saturating at
/// UINT64_MAX.
std::uint64_t completion_count(const Poset& p);

/// Walks every total choice of joins and meets for the incomparable pairs of
/// a directed poset in odometer order (last pair fastest, join before meet).
class CompletionEnumerator {
 public:
  /// Throws NotDirectedError, or BudgetError when completion_count exceeds
  /// the budget.
  CompletionEnumerator(const Poset& p, std::uint64_t budget = kDefaultCompletionBudget);

  std::optional<LambdaLattice> next();
  std::uint64_t total() const { return total_; }

 private:
  struct Slot {
    Element x;
    Element y;
    bool is_join;
    std::vector<Element> values;
  };

  Poset poset_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> digits_;
  std::uint64_t total_ = 1;
  bool done_ = false;
};

std::vector<LambdaLattice> enumerate_completions(const Poset& p, std::uint64_t budget = kDefaultCompletionBudget);

/// A bijection from the first to the second carrier preserving the order
/// (and, for λ-lattices, both tables). Brute force over permutations.
std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b);
std::optional<std::vector<Element>> find_isomorphism(const LambdaLattice& a, const LambdaLattice& b);

/// True when no relabeling gives a lexicographically smaller order matrix.
bool is_canonical(const Poset& p);

enum class TheoremId {
  TH1,           // semimodular ∧ (3) ⇒ WLCC
  TH2,           // semimodular ∧ (4) ∧ (5) ∧ DCC ⇒ LCC
  LEM1,          // a Lemma-1 quadruple rules out semimodularity
  LEM2,          // convex sub-λ-lattices of semimodular ones are semimodular
  HEIGHT,        // LCC ⇒ height inequality, h = longest chain from the bottom
  HEIGHT_SHORTEST,  // as HEIGHT with h = shortest maximal chain from the bottom
  CHAINS,        // LU-covering with top ⇒ maximal chains to top have equal length
  ACUTE,         // acute LCC ⇔ atom condition ⇔ one of the three clauses
  COR1,          // acute LCC ⇔ |P|=1 ∨ |A|=1 ∨ P ≅ M_n
  MONO,          // monotone ⇔ lattice
  MODLAT,        // modular ⇒ lattice, distributive ⇒ lattice
  SMLAT,         // semimodular lattice ⇒ LCC
  TH1_NO_COND3,  // mutant: semimodular ⇒ WLCC
  TH1_LCC,       // mutant: semimodular ∧ (3) ⇒ LCC
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  std::string_view statement;
  bool over_completions;  // quantifies over λ-lattices rather than posets
  bool mutant;            // a deliberately false variant
};

const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo& theorem_info(TheoremId id);
std::string_view to_string(TheoremId id);
/// Throws UnknownTheoremError.
TheoremId parse_theorem_id(std::string_view name);

/// A description of why the instance violates the statement, or nullopt.
/// Throws Error when the theorem quantifies over the other kind of instance.
std::optional<std::string> check_theorem(TheoremId id, const LambdaLattice& ll);
std::optional<std::string> check_theorem(TheoremId id, const Poset& p);

struct Counterexample {
  std::uint64_t poset_ordinal = 0;
  std::uint64_t completion_ordinal = 0;
  Poset poset;
  std::optional<LambdaLattice> lattice;
  std::string witness;

  /// Instance-file text reproducing the counterexample.
  std::string instance_text() const;
  auto order_key() const { return std::pair{poset_ordinal, completion_ordinal}; }
};

struct VerifyOptions {
  EnumerationFilter filter;
  std::uint64_t budget = kDefaultCompletionBudget;
  unsigned threads = 1;
  /// How many counterexamples to retain (least first); all are counted.
  std::size_t keep_counterexamples = 1;
};

struct VerificationResult {
  TheoremId theorem = TheoremId::TH1;
  std::size_t max_elements = 0;
  std::uint64_t posets_checked = 0;
  std::uint64_t lattices_checked = 0;
  std::uint64_t posets_skipped = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  bool clean() const { return counterexample_count == 0; }
  const Counterexample* counterexample() const { return counterexamples.empty() ? nullptr : &counterexamples.front(); }
  /// Plain statement of what was covered.
  std::string scope() const;
};

/// Replays the statement over every enumerated instance. The retained
/// counterexamples are the least by (poset ordinal, completion ordinal), so
/// the result does not depend on the thread count.
VerificationResult verify(TheoremId id, const VerifyOptions& options);

/// Re-parses the counterexample's instance text and re-checks it.
bool revalidate(TheoremId id, const Counterexample& cx);

/// (SM, WLCC, LCC) triples realized by all completions of directed posets
/// under the filter.
std::set<ClassTriple> independence_table(const EnumerationFilter& filter,
                                         std::uint64_t budget = kDefaultCompletionBudget);
std::set<ClassTriple> independence_table(std::span<const LambdaLattice> instances);

}  // namespace lambdalat
