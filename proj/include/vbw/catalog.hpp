#pragma once

#include <string>
#include <vector>

#include "vbw/kbeq.hpp"
#include "vbw/perm.hpp"
#include "vbw/vb.hpp"

namespace vbw {

enum class GroupKind { Sym, VB };

// Element of S_m or VB_m (the latter in semidirect form), so homomorphism
// evaluation can share one code path.
struct GroupElement {
  GroupKind kind;
  Permutation perm;      // Sym
  SemidirectElement sd;  // VB

  static GroupElement sym(Permutation p) { return {GroupKind::Sym, std::move(p), {}}; }
  static GroupElement vb(SemidirectElement x) { return {GroupKind::VB, {}, std::move(x)}; }
  static GroupElement identity(GroupKind kind, int degree);

  GroupElement mul(const GroupElement& o) const;
  GroupElement inv() const;
  std::string str() const;
};

// Is x the identity?  Exact in S_m; in VB_m the permutation part is exact and
// the kb part goes through the tiered oracle.
EqVerdict element_trivial(const GroupElement& x, Budget& budget);
EqVerdict element_equal(const GroupElement& x, const GroupElement& y, Budget& budget);

// A homomorphism given by generator images.  For a Sym source, images_a[i]
// is the image of s_{i+1}; for a VB source, images_a[i] is the image of
// sigma_{i+1} and images_b[i] the image of tau_{i+1}.
struct CatalogHom {
  std::string name;
  GroupKind source, target;
  int n = 0, m = 0;
  std::vector<GroupElement> images_a;
  std::vector<GroupElement> images_b;

  GroupElement eval(const VBWord& w) const;                 // VB source
  GroupElement eval_sym_word(const std::vector<int>& w) const;  // Sym source, signed indices
  GroupElement eval_perm(const Permutation& p) const;       // Sym source
};

// Defining relators of VB_n as words over sigma/tau.
std::vector<VBWord> vb_relators(int n);
// Defining relators of S_n as signed words over s_1..s_{n-1}.
std::vector<std::vector<int>> sym_relators(int n);

// Registry.  Valid names: piK, piP, iota, zeta1, zeta2, id (VB_n -> VB_n),
// idSym, nu6, nu6.piK, nu6.piP, iota.nu6, iota.piK, iota.piP, iota.nu6.piK,
// iota.nu6.piP.  Names involving nu6 require n = 6.  Every hom is checked
// against its source presentation on construction.
CatalogHom make_catalog_hom(const std::string& name, int n, long budget = kDefaultBudget);
std::vector<std::string> catalog_hom_names(int n);

// Re-verify all source relators; returns the first failing relator's verdict
// if any (Equal outcome means every relator passed).
struct HomVerification {
  bool ok = false;
  bool unknown = false;
  std::string failed_relator;
  std::string detail;
};
HomVerification verify_catalog_hom(const CatalogHom& h, long budget = kDefaultBudget);

// A generator on which the two homs provably differ (permutation part,
// abelianization, or a Distinct kb verdict); empty when none found.
std::string distinguish_homs(const CatalogHom& a, const CatalogHom& b,
                             long budget = kDefaultBudget);

}  // namespace vbw
