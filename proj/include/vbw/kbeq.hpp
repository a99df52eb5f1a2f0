#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vbw/artin.hpp"
#include "vbw/vb.hpp"

namespace vbw {

// Rewriting effort is metered in expanded search nodes.
inline constexpr long kDefaultBudget = 10000;

struct Budget {
  long limit = kDefaultBudget;
  long spent = 0;
  bool take(long k = 1) {
    spent += k;
    return spent <= limit;
  }
  bool ok() const { return spent <= limit; }
  long remaining() const { return limit > spent ? limit - spent : 0; }
};

enum class EqOutcome { Equal, Distinct, Unknown };

// Verdict of the tiered equality oracle.  Equal and Distinct are sound:
// Equal certificates name the deciding normal form or a rewrite path,
// Distinct witnesses carry invariant values the caller can recompute.
struct EqVerdict {
  EqOutcome outcome = EqOutcome::Unknown;
  std::string certificate;  // set for Equal
  std::string witness;      // set for Distinct
  long budget_spent = 0;

  bool equal() const { return outcome == EqOutcome::Equal; }
  bool distinct() const { return outcome == EqOutcome::Distinct; }
  bool unknown() const { return outcome == EqOutcome::Unknown; }
  std::string to_json() const;
};

EqVerdict kb_equal(const KBWord& u, const KBWord& v, long budget = kDefaultBudget);
EqVerdict kb_equal(const KBWord& u, const KBWord& v, Budget& budget);
EqVerdict kb_trivial(const KBWord& w, Budget& budget);
EqVerdict kb_trivial(const KBWord& w, long budget = kDefaultBudget);

// Canonical form in a right-angled parabolic (submatrix entries in {2, inf}):
// shuffle-cancellation to the unique reduced trace, then the lexicographic
// linearization.  Equal words have identical output.
KBWord raag_normal_form(const KBWord& u, const GeneratorSubset& X);

// Garside-style normal form in the two-generator Artin group <a,b|aba=bab>:
// a power of Delta = aba followed by a left-greedy sequence of proper simple
// factors.  Simples are encoded 0..5 = 1, a, b, ab, ba, Delta.
struct DihedralNF {
  int delta_power = 0;
  std::vector<int> simples;  // entries in 1..4 after normalization
  bool trivial() const { return delta_power == 0 && simples.empty(); }
  friend bool operator==(const DihedralNF&, const DihedralNF&) = default;
  std::string str() const;
};

DihedralNF dihedral_normal_form(const KBWord& u, const DeltaGen& a, const DeltaGen& b);

// Bounded best-first search over free reduction, commutation swaps and braid
// rewrites for an equivalent word supported in X; nullopt when the budget
// runs out.  All moves are relation instances, so any output is equal to w.
std::optional<KBWord> eliminate_to_support(const KBWord& w, const GeneratorSubset& X,
                                           Budget& budget);

// Best word (shortest, then lexicographically least) found within the budget.
KBWord simplify_word(const KBWord& w, Budget& budget);

}  // namespace vbw
