#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vbw {

// ---------------------------------------------------------------------------
// Words over abstract integer generators, freely reduced; the element type
// for the free-group instantiations of the amalgam engine.

class GWord {
public:
  GWord() = default;
  GWord(std::vector<std::pair<int, int>> letters);  // (gen id >= 1, exp +-1)

  static GWord gen(int id, int exp = 1) { return GWord({{id, exp}}); }

  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<std::pair<int, int>>& letters() const { return letters_; }

  GWord concat(const GWord& o) const;
  GWord inverse() const;
  GWord pow(int k) const;

  std::string str() const;  // "g1 g2'"
  friend bool operator==(const GWord&, const GWord&) = default;

private:
  std::vector<std::pair<int, int>> letters_;
};

// ---------------------------------------------------------------------------
// Oracle-parameterized engine for amalgamated products G_1 *_H ... *_H G_p.
// Elements are opaque; everything the engine knows comes through the oracles.
// theta_beta must return the canonical transversal representative: for g in
// G_j, g = theta * beta with beta in H, theta in T_j, and theta == identity
// exactly when g lies in H.  A nullopt from an oracle means it could not
// decide within its budget and propagates as nullopt ("unknown").

template <class Elem>
struct AmalgamOracles {
  int factor_count = 2;
  Elem identity;
  std::function<Elem(const Elem&, const Elem&)> mul;
  std::function<Elem(const Elem&)> inv;
  std::function<bool(const Elem&, const Elem&)> eq;  // canonical reps compare syntactically
  std::function<std::optional<std::pair<Elem, Elem>>(int j, const Elem&)> theta_beta;
  // Split a global element into factor chunks (j, g) for the fold.
  std::function<std::vector<std::pair<int, Elem>>(const Elem&)> syllabify;
};

template <class Elem>
struct AmalgamNF {
  std::vector<std::pair<int, Elem>> syllables;  // (factor, theta in T_j \ {1})
  Elem base;
  int length() const { return static_cast<int>(syllables.size()); }
};

// The transversal fold: theta_1 is the representative of alpha_1 H, and each
// beta_{i-1} alpha_i splits as theta_i beta_i in its factor.  Handles inputs
// that are not strictly alternating and chunks that collapse into the base.
template <class Elem>
std::optional<AmalgamNF<Elem>> amalgam_normal_form(const AmalgamOracles<Elem>& o,
                                                   const std::vector<std::pair<int, Elem>>& input) {
  AmalgamNF<Elem> nf{{}, o.identity};
  std::vector<std::pair<int, Elem>> queue(input.rbegin(), input.rend());
  while (!queue.empty()) {
    auto [j, g] = queue.back();
    queue.pop_back();
    if (j < 1 || j > o.factor_count) throw std::invalid_argument("amalgam: bad factor index");
    Elem chunk = o.mul(nf.base, g);
    if (!nf.syllables.empty() && nf.syllables.back().first == j) {
      chunk = o.mul(nf.syllables.back().second, chunk);
      nf.syllables.pop_back();
    }
    auto tb = o.theta_beta(j, chunk);
    if (!tb) return std::nullopt;
    if (!o.eq(tb->first, o.identity)) nf.syllables.push_back({j, tb->first});
    nf.base = tb->second;
  }
  return nf;
}

template <class Elem>
std::optional<AmalgamNF<Elem>> amalgam_nf_of(const AmalgamOracles<Elem>& o, const Elem& alpha) {
  return amalgam_normal_form(o, o.syllabify(alpha));
}

template <class Elem>
bool amalgam_nf_equal(const AmalgamOracles<Elem>& o, const AmalgamNF<Elem>& a,
                      const AmalgamNF<Elem>& b) {
  if (a.length() != b.length()) return false;
  for (int k = 0; k < a.length(); ++k)
    if (a.syllables[k].first != b.syllables[k].first ||
        !o.eq(a.syllables[k].second, b.syllables[k].second))
      return false;
  return o.eq(a.base, b.base);
}

template <class Elem>
Elem amalgam_nf_element(const AmalgamOracles<Elem>& o, const AmalgamNF<Elem>& nf) {
  Elem out = o.identity;
  for (const auto& [j, theta] : nf.syllables) out = o.mul(out, theta);
  return o.mul(out, nf.base);
}

// An automorphism acting on the amalgam, given by its action on factor
// indices and on elements; must map transversals to transversals.
template <class Elem>
struct AmalgamAutomorphism {
  std::function<int(int)> factor_map;
  std::function<Elem(const Elem&)> elem_map;
};

enum class SwapFixedOutcome { InBase, NotFixed, Unknown };

template <class Elem>
struct SwapFixedResult {
  SwapFixedOutcome outcome;
  Elem base_witness;        // valid when InBase
  int differing_syllable;   // valid when NotFixed; -1 means the base differs
};

// A factor-swapping involution fixes only base elements.  Checks
// tau(alpha) = alpha via normal forms and reports the witness either way.
template <class Elem>
SwapFixedResult<Elem> swap_fixed_check(const AmalgamOracles<Elem>& o,
                                       const AmalgamAutomorphism<Elem>& tau, const Elem& alpha) {
  auto nf = amalgam_nf_of(o, alpha);
  auto nft = amalgam_nf_of(o, tau.elem_map(alpha));
  if (!nf || !nft) return {SwapFixedOutcome::Unknown, o.identity, 0};
  if (nf->length() != nft->length())
    return {SwapFixedOutcome::NotFixed, o.identity, 0};
  for (int k = 0; k < nf->length(); ++k)
    if (nf->syllables[k].first != nft->syllables[k].first ||
        !o.eq(nf->syllables[k].second, nft->syllables[k].second))
      return {SwapFixedOutcome::NotFixed, o.identity, k};
  if (!o.eq(nf->base, nft->base)) return {SwapFixedOutcome::NotFixed, o.identity, -1};
  if (nf->length() != 0)
    throw std::logic_error("swap_fixed_check: factor-swapping involution fixed a syllable");
  return {SwapFixedOutcome::InBase, nf->base, 0};
}

// Constructive twisted decomposition in G_1 *_H G_2 for a factor-swapping
// involution tau: given tau(alpha) = alpha^{-1}, produce (alpha', beta') with
// alpha = alpha' beta' tau(alpha'^{-1}) and beta' in H, tau(beta') = beta'^{-1}.
// Peels the first and last syllables of the normal form and recurses on the
// inner part, whose syllable length drops by two each round.
template <class Elem>
std::optional<std::pair<Elem, Elem>> twisted_decompose(const AmalgamOracles<Elem>& o,
                                                       const AmalgamAutomorphism<Elem>& tau,
                                                       const Elem& alpha) {
  {  // precondition tau(alpha) = alpha^{-1}
    auto lhs = amalgam_nf_of(o, tau.elem_map(alpha));
    auto rhs = amalgam_nf_of(o, o.inv(alpha));
    if (!lhs || !rhs) return std::nullopt;
    if (!amalgam_nf_equal(o, *lhs, *rhs))
      throw std::invalid_argument("twisted_decompose: tau(alpha) != alpha^{-1}");
  }
  auto nf0 = amalgam_nf_of(o, alpha);
  if (!nf0) return std::nullopt;

  std::function<std::optional<std::pair<Elem, Elem>>(const AmalgamNF<Elem>&)> peel =
      [&](const AmalgamNF<Elem>& nf) -> std::optional<std::pair<Elem, Elem>> {
    if (nf.length() == 0) return std::make_pair(o.identity, nf.base);
    const auto& [j_first, theta_first] = nf.syllables.front();
    const auto& [j_last, theta_last] = nf.syllables.back();
    if (j_last != tau.factor_map(j_first) || nf.length() % 2 != 0)
      throw std::invalid_argument("twisted_decompose: normal form shape contradicts precondition");
    // theta_l beta tau(theta_1) is forced into H
    Elem gamma = o.mul(o.mul(theta_last, nf.base), tau.elem_map(theta_first));
    auto tb = o.theta_beta(j_last, gamma);
    if (!tb) return std::nullopt;
    if (!o.eq(tb->first, o.identity))
      throw std::invalid_argument("twisted_decompose: junction element not in the base");
    AmalgamNF<Elem> inner;
    inner.syllables.assign(nf.syllables.begin() + 1, nf.syllables.end() - 1);
    inner.base = tb->second;
    auto rec = peel(inner);
    if (!rec) return std::nullopt;
    return std::make_pair(o.mul(theta_first, rec->first), rec->second);
  };

  auto result = peel(*nf0);
  if (!result) return std::nullopt;
  {  // self-check by multiplying back
    Elem rebuilt = o.mul(o.mul(result->first, result->second),
                         tau.elem_map(o.inv(result->first)));
    auto lhs = amalgam_nf_of(o, rebuilt);
    auto rhs = amalgam_nf_of(o, alpha);
    if (!lhs || !rhs) return std::nullopt;
    if (!amalgam_nf_equal(o, *lhs, *rhs))
      throw std::logic_error("twisted_decompose: self-check failed");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free-group instantiations used by the test and acceptance suites: each
// factor is a free group on an alphabet containing the base alphabet, the
// base is the free group on the base alphabet, and the transversal of H in
// G_j is the set of reduced words with no base-letter suffix.

AmalgamOracles<GWord> make_free_amalgam(std::vector<std::vector<int>> factor_alphabets,
                                        std::vector<int> base_alphabet);

// Letter renaming as an automorphism; ids absent from the map stay fixed.
AmalgamAutomorphism<GWord> make_letter_swap(const std::vector<std::pair<int, int>>& swaps,
                                            const std::function<int(int)>& factor_map);

}  // namespace vbw
