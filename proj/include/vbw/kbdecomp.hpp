#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vbw/kbeq.hpp"
#include "vbw/vb.hpp"

namespace vbw {

// Constructive decompositions in KB_n driven by the amalgam towers over the
// pairs {delta_{1,2}, delta_{2,1}}, {delta_{1,k}, delta_{2,k}} and
// {delta_{k,1}, delta_{k,2}}.  All outputs are re-verified through kb_equal
// before being returned; nullopt means some internal oracle ran out of
// budget, never a wrong answer.

// Given X s_1-invariant and a in KB_n[X] with s_1(a) = a^{-1} (certified),
// produce alpha' in KB_n[X] with a = alpha' * s_1(alpha'^{-1}).
std::optional<KBWord> s1_twisted_decompose(const KBWord& a, const GeneratorSubset& X,
                                           Budget& budget);
std::optional<KBWord> s1_twisted_decompose(const KBWord& a, const GeneratorSubset& X,
                                           long budget = kDefaultBudget);

// The same tower for the action of an arbitrary transposition (p, q).
std::optional<KBWord> transposition_twisted_decompose(const KBWord& a, const GeneratorSubset& X,
                                                      int p, int q, Budget& budget);

// Left-hand side of the hexagon equation for the actions of s_{k1}, s_{k2}:
//   a s2(a^-1) (s2 s1)(a) (s2 s1 s2)(a^-1) (s1 s2)(a) s1(a^-1).
KBWord hexagon_lhs(const KBWord& a, int k1, int k2);

// Given X invariant under s_1 and s_2 and a satisfying the hexagon equation
// (certified), produce (a', a'') with s_1(a') = a', s_2(a'') = a'' and
// a = a' a''.  Letters fixed by s_1 are pushed into a' greedily from the left.
std::optional<std::pair<KBWord, KBWord>> hexagon_decompose(const KBWord& a,
                                                           const GeneratorSubset& X,
                                                           Budget& budget);
std::optional<std::pair<KBWord, KBWord>> hexagon_decompose(const KBWord& a,
                                                           const GeneratorSubset& X,
                                                           long budget = kDefaultBudget);

// Hexagon splitting for the pair (s_k, s_{k+1}) via index relabeling.
std::optional<std::pair<KBWord, KBWord>> hexagon_decompose_at(const KBWord& a,
                                                              const GeneratorSubset& X, int k,
                                                              Budget& budget);

// Conjugator synthesis for a symmetric-group section: images[i-1] must be
// phi(s_i) with permutation part s_i.  Returns beta in KB_n such that
// conjugating every image by beta^{-1} yields (e, s_i), verified; nullopt
// when an internal decomposition exhausts its budget.  Images that fail a
// required relation raise std::invalid_argument.
std::optional<KBWord> straighten_symmetric_section(const std::vector<SemidirectElement>& images,
                                                   long budget = kDefaultBudget);

}  // namespace vbw
