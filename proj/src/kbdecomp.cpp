#include "vbw/kbdecomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace vbw {

namespace {

// Cyclic relabeling with g(1) = k, g(2) = k+1, ...; maps the prefix frame
// onto the {k..n} frame.
Permutation shift_perm(int n, int k) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) {
    int v = i + k - 1;
    if (v > n) v -= n;
    img[i - 1] = v;
  }
  return Permutation(img);
}

GeneratorSubset s_tail(int n, int k) {  // {delta_{i,j} | k <= i != j <= n}
  GeneratorSubset X(n);
  for (int i = k; i <= n; ++i)
    for (int j = k; j <= n; ++j)
      if (i != j) X.insert({i, j});
  return X;
}

KBWord simplify_capped(const KBWord& w, Budget& budget, long cap) {
  Budget sub{std::min(cap, budget.remaining()), 0};
  KBWord out = simplify_word(w, sub);
  budget.take(sub.spent);
  return out;
}

// ---------------------------------------------------------------------------
// Word-level syllable blocks for one amalgam stage.  A block collects
// consecutive letters from one factor; base letters attach to the open block
// (a leading base run attaches to the first proper block, a trailing run to
// the last).  factor_of returns 0 for base letters.

struct Block {
  int factor;
  std::vector<KBLetter> letters;
};

template <class FactorOf>
std::vector<Block> blockify(const KBWord& w, FactorOf factor_of) {
  std::vector<Block> blocks;
  std::vector<KBLetter> pending;
  for (const auto& l : w.letters()) {
    int f = factor_of(l.gen);
    if (f == 0) {
      if (blocks.empty())
        pending.push_back(l);
      else
        blocks.back().letters.push_back(l);
      continue;
    }
    if (blocks.empty() || blocks.back().factor != f) {
      blocks.push_back({f, pending});
      pending.clear();
    }
    blocks.back().letters.push_back(l);
  }
  return blocks;  // pending nonempty only when w has no proper letters at all
}

KBWord block_word(int n, const Block& b) { return KBWord(n, b.letters); }

// ---------------------------------------------------------------------------
// One stage of the twisted tower: peel a = alpha' * base * t(alpha'^{-1})
// with respect to the factor pair (x, y) swapped by the transposition t.
// The returned base is supported in base_target.

struct StagePeel {
  KBWord alpha_prime;
  KBWord base;
};

std::optional<StagePeel> stage_peel(const KBWord& a, const Permutation& t, const DeltaGen& x,
                                    const DeltaGen& y, const GeneratorSubset& base_target,
                                    Budget& budget) {
  const int n = a.strands();
  auto factor_of = [&](const DeltaGen& g) { return g == x ? 1 : g == y ? 2 : 0; };
  KBWord word = a;
  KBWord alpha_prime(n);
  while (true) {
    auto blocks = blockify(word, factor_of);
    if (blocks.empty() || blocks[0].factor == 0) return StagePeel{alpha_prime, word};
    const size_t m = blocks.size();
    if (m == 1 || blocks.front().factor == blocks.back().factor) {
      // a lone or odd-count block must secretly lie in the base
      auto reduced = eliminate_to_support(word, base_target, budget);
      if (!reduced) return std::nullopt;
      return StagePeel{alpha_prime, *reduced};
    }
    KBWord first = block_word(n, blocks.front());
    KBWord last = block_word(n, blocks.back());
    KBWord gamma_word = last.concat(perm_act_kb(t, first));
    auto gamma = eliminate_to_support(gamma_word, base_target, budget);
    if (!gamma) return std::nullopt;
    KBWord middle(n);
    for (size_t b = 1; b + 1 < m; ++b) middle = middle.concat(block_word(n, blocks[b]));
    word = middle.concat(*gamma);
    alpha_prime = alpha_prime.concat(first);
  }
}

// Stage pairs of the twisted tower for the transposition (p, q).
std::vector<std::pair<DeltaGen, DeltaGen>> twisted_stages(int n, int p, int q) {
  std::vector<std::pair<DeltaGen, DeltaGen>> stages;
  stages.push_back({{p, q}, {q, p}});
  for (int k = 1; k <= n; ++k)
    if (k != p && k != q) stages.push_back({{p, k}, {q, k}});
  for (int k = 1; k <= n; ++k)
    if (k != p && k != q) stages.push_back({{k, p}, {k, q}});
  return stages;
}

}  // namespace

std::optional<KBWord> transposition_twisted_decompose(const KBWord& a, const GeneratorSubset& X,
                                                      int p, int q, Budget& budget) {
  const int n = a.strands();
  const Permutation t = Permutation::transposition(n, p, q);
  if (!X.invariant_under(t))
    throw std::invalid_argument("twisted_decompose: X not invariant under the transposition");
  if (!a.support().subset_of(X))
    throw std::invalid_argument("twisted_decompose: support of a not contained in X");
  {  // precondition t(a) = a^{-1}
    EqVerdict pre = kb_trivial(perm_act_kb(t, a).concat(a), budget);
    if (pre.distinct())
      throw std::invalid_argument("twisted_decompose: t(a) != a^{-1} (" + pre.witness + ")");
    if (pre.unknown()) return std::nullopt;
  }
  GeneratorSubset allowed = X;
  KBWord word = a;
  KBWord alpha_prime(n);
  for (const auto& [x, y] : twisted_stages(n, p, q)) {
    allowed = allowed.minus(GeneratorSubset(n, {x, y}));
    auto peeled = stage_peel(word, t, x, y, allowed, budget);
    if (!peeled) return std::nullopt;
    alpha_prime = alpha_prime.concat(peeled->alpha_prime);
    word = peeled->base;
  }
  // residual base is fixed letterwise and squares to 1, so it must vanish
  EqVerdict base_trivial = kb_trivial(word, budget);
  if (base_trivial.unknown()) return std::nullopt;
  if (base_trivial.distinct())
    throw std::logic_error("twisted_decompose: residual base is nontrivial");
  // re-verify by multiplication: alpha'^{-1} a t(alpha') must be trivial
  EqVerdict check =
      kb_trivial(alpha_prime.inverse().concat(a).concat(perm_act_kb(t, alpha_prime)), budget);
  if (check.unknown()) return std::nullopt;
  if (check.distinct()) throw std::logic_error("twisted_decompose: self-check failed");
  return simplify_capped(alpha_prime, budget, 200);
}

std::optional<KBWord> s1_twisted_decompose(const KBWord& a, const GeneratorSubset& X,
                                           Budget& budget) {
  return transposition_twisted_decompose(a, X, 1, 2, budget);
}

std::optional<KBWord> s1_twisted_decompose(const KBWord& a, const GeneratorSubset& X, long budget) {
  Budget b{budget, 0};
  return s1_twisted_decompose(a, X, b);
}

KBWord hexagon_lhs(const KBWord& a, int k1, int k2) {
  const int n = a.strands();
  const Permutation s1 = Permutation::adjacent(n, k1), s2 = Permutation::adjacent(n, k2);
  const KBWord ai = a.inverse();
  KBWord out = a;
  out = out.concat(perm_act_kb(s2, ai));
  out = out.concat(perm_act_kb(compose(s2, s1), a));
  out = out.concat(perm_act_kb(compose(compose(s2, s1), s2), ai));
  out = out.concat(perm_act_kb(compose(s1, s2), a));
  out = out.concat(perm_act_kb(s1, ai));
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// One stage of the hexagon tower (three factors amalgamated over a base, the
// recursion of the two-automorphism splitting lemma, word level).  markers[j]
// is the generator whose letters put a block into factor j+1; t1 fixes factor
// fix1 and swaps the other two, t2 fixes factor fix2.

struct HexagonPieces {
  KBWord left;   // t1-fixed
  KBWord base;   // supported in base_target
  KBWord right;  // t2-fixed
};

// gamma = delta * t(delta^{-1}) within the base parabolic.  A precondition
// failure here means the word-level blocks were unfaithful, so it reports
// "don't know" and lets the caller try another branch.
std::optional<KBWord> base_twisted(const KBWord& gamma, const Permutation& t, int p, int q,
                                   Budget& budget) {
  GeneratorSubset Xg = gamma.support();
  Xg = Xg.unite(Xg.apply(t));
  try {
    return transposition_twisted_decompose(gamma, Xg, p, q, budget);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<HexagonPieces> hexagon_stage_peel(const KBWord& a, const Permutation& t1, int p1,
                                                int q1, const Permutation& t2, int p2, int q2,
                                                const std::array<DeltaGen, 3>& markers, int fix1,
                                                int fix2, const GeneratorSubset& base_target,
                                                Budget& budget) {
  const int n = a.strands();
  auto factor_of = [&](const DeltaGen& g) {
    for (int j = 0; j < 3; ++j)
      if (g == markers[j]) return j + 1;
    return 0;
  };
  auto blocks = blockify(a, factor_of);
  if (blocks.empty() || blocks[0].factor == 0) return HexagonPieces{KBWord(n), a, KBWord(n)};
  const size_t m = blocks.size();
  if (m == 1) {
    KBWord b1 = block_word(n, blocks[0]);
    const int j = blocks[0].factor;
    if (j == fix1) {
      auto gamma = eliminate_to_support(b1.inverse().concat(perm_act_kb(t1, b1)), base_target,
                                        budget);
      if (!gamma) return std::nullopt;
      auto delta = base_twisted(*gamma, t1, p1, q1, budget);
      if (!delta) return std::nullopt;
      return HexagonPieces{b1.concat(*delta), delta->inverse(), KBWord(n)};
    }
    if (j == fix2) {
      auto gamma = eliminate_to_support(b1.concat(perm_act_kb(t2, b1.inverse())), base_target,
                                        budget);
      if (!gamma) return std::nullopt;
      auto e = base_twisted(*gamma, t2, p2, q2, budget);
      if (!e) return std::nullopt;
      return HexagonPieces{KBWord(n), *e, e->inverse().concat(b1)};
    }
    // block moved by both automorphisms: only consistent if it collapses
    auto reduced = eliminate_to_support(a, base_target, budget);
    if (!reduced) return std::nullopt;
    return HexagonPieces{KBWord(n), *reduced, KBWord(n)};
  }

  // letters fixed by t1 go left first (deterministic tie-break)
  if (blocks.front().factor == fix1) {
    KBWord b1 = block_word(n, blocks.front());
    auto gamma =
        eliminate_to_support(perm_act_kb(t1, b1.inverse()).concat(b1), base_target, budget);
    if (gamma) {
      auto d = base_twisted(*gamma, t1, p1, q1, budget);
      if (d) {
        KBWord delta = perm_act_kb(t1, *d);
        KBWord middle = delta.inverse();
        for (size_t b = 1; b < m; ++b) middle = middle.concat(block_word(n, blocks[b]));
        auto rec = hexagon_stage_peel(middle, t1, p1, q1, t2, p2, q2, markers, fix1, fix2,
                                      base_target, budget);
        if (!rec) return std::nullopt;
        return HexagonPieces{b1.concat(delta).concat(rec->left), rec->base, rec->right};
      }
    }
  }
  if (blocks.back().factor == fix2) {
    KBWord bl = block_word(n, blocks.back());
    auto gamma = eliminate_to_support(bl.concat(perm_act_kb(t2, bl.inverse())), base_target,
                                      budget);
    if (gamma) {
      auto e = base_twisted(*gamma, t2, p2, q2, budget);
      if (e) {
        KBWord middle(n);
        for (size_t b = 0; b + 1 < m; ++b) middle = middle.concat(block_word(n, blocks[b]));
        middle = middle.concat(*e);
        auto rec = hexagon_stage_peel(middle, t1, p1, q1, t2, p2, q2, markers, fix1, fix2,
                                      base_target, budget);
        if (!rec) return std::nullopt;
        return HexagonPieces{rec->left, rec->base, rec->right.concat(e->inverse()).concat(bl)};
      }
    }
  }
  // neither end was peelable: the whole word must collapse into the base
  auto reduced = eliminate_to_support(a, base_target, budget);
  if (!reduced) return std::nullopt;
  return HexagonPieces{KBWord(n), *reduced, KBWord(n)};
}

}  // namespace

std::optional<std::pair<KBWord, KBWord>> hexagon_decompose(const KBWord& a,
                                                           const GeneratorSubset& X,
                                                           Budget& budget) {
  const int n = a.strands();
  if (n < 3) throw std::invalid_argument("hexagon_decompose: n >= 3 required");
  const Permutation s1 = Permutation::adjacent(n, 1), s2 = Permutation::adjacent(n, 2);
  if (!X.invariant_under(s1) || !X.invariant_under(s2))
    throw std::invalid_argument("hexagon_decompose: X not invariant under s_1 and s_2");
  if (!a.support().subset_of(X))
    throw std::invalid_argument("hexagon_decompose: support of a not contained in X");
  {  // hexagon precondition
    EqVerdict pre = kb_trivial(hexagon_lhs(a, 1, 2), budget);
    if (pre.distinct())
      throw std::invalid_argument("hexagon_decompose: hexagon equation fails (" + pre.witness +
                                  ")");
    if (pre.unknown()) return std::nullopt;
  }

  KBWord left(n), right(n), word = a;
  GeneratorSubset allowed = X;
  auto run_stage = [&](const std::array<DeltaGen, 3>& markers) -> bool {
    GeneratorSubset stage_set(n);
    for (const auto& g : markers) stage_set.insert(g);
    allowed = allowed.minus(stage_set);
    auto res = hexagon_stage_peel(word, s1, 1, 2, s2, 2, 3, markers, 3, 1, allowed, budget);
    if (!res) return false;
    left = left.concat(res->left);
    right = res->right.concat(right);
    word = res->base;
    return true;
  };
  for (int k = 4; k <= n; ++k)
    if (!run_stage({DeltaGen{1, k}, DeltaGen{2, k}, DeltaGen{3, k}})) return std::nullopt;
  for (int k = 4; k <= n; ++k)
    if (!run_stage({DeltaGen{k, 1}, DeltaGen{k, 2}, DeltaGen{k, 3}})) return std::nullopt;

  // The residue lives in (pairs on {1,2,3}) x (pairs on {4..n}); the second
  // factor is fixed by both actions and commutes with the first, so it joins
  // the left part, and the first factor must vanish.
  std::vector<KBLetter> w1, w2;
  for (const auto& l : word.letters()) {
    if (l.gen.i >= 4 && l.gen.j >= 4)
      w2.push_back(l);
    else if (l.gen.i <= 3 && l.gen.j <= 3)
      w1.push_back(l);
    else
      throw std::logic_error("hexagon_decompose: residue letter escaped both towers");
  }
  left = left.concat(KBWord(n, w2));
  EqVerdict w1_trivial = kb_trivial(KBWord(n, w1), budget);
  if (w1_trivial.unknown()) return std::nullopt;
  if (w1_trivial.distinct())
    throw std::logic_error("hexagon_decompose: inner residue is nontrivial");

  left = simplify_capped(left, budget, 200);
  right = simplify_capped(right, budget, 200);
  // certify the postconditions
  EqVerdict prod = kb_equal(a, left.concat(right), budget);
  if (prod.distinct()) throw std::logic_error("hexagon_decompose: product self-check failed");
  EqVerdict fix_l = kb_equal(perm_act_kb(s1, left), left, budget);
  if (fix_l.distinct()) throw std::logic_error("hexagon_decompose: left part not s_1-fixed");
  EqVerdict fix_r = kb_equal(perm_act_kb(s2, right), right, budget);
  if (fix_r.distinct()) throw std::logic_error("hexagon_decompose: right part not s_2-fixed");
  if (prod.unknown() || fix_l.unknown() || fix_r.unknown()) return std::nullopt;
  return std::make_pair(left, right);
}

std::optional<std::pair<KBWord, KBWord>> hexagon_decompose(const KBWord& a,
                                                           const GeneratorSubset& X, long budget) {
  Budget b{budget, 0};
  return hexagon_decompose(a, X, b);
}

std::optional<std::pair<KBWord, KBWord>> hexagon_decompose_at(const KBWord& a,
                                                              const GeneratorSubset& X, int k,
                                                              Budget& budget) {
  if (k == 1) return hexagon_decompose(a, X, budget);
  const int n = a.strands();
  const Permutation g = shift_perm(n, k);
  const Permutation gi = g.inverse();
  auto res = hexagon_decompose(perm_act_kb(gi, a), X.apply(gi), budget);
  if (!res) return std::nullopt;
  return std::make_pair(perm_act_kb(g, res->first), perm_act_kb(g, res->second));
}

std::optional<KBWord> straighten_symmetric_section(const std::vector<SemidirectElement>& images,
                                                   long budget_limit) {
  if (images.empty()) throw std::invalid_argument("straighten: no images");
  const int n = images.front().kb.strands();
  if (static_cast<int>(images.size()) != n - 1)
    throw std::invalid_argument("straighten: expected n-1 images");
  for (int i = 1; i <= n - 1; ++i)
    if (images[i - 1].perm != Permutation::adjacent(n, i))
      throw std::invalid_argument("straighten: image " + std::to_string(i) +
                                  " does not project to s_" + std::to_string(i));
  Budget budget{budget_limit, 0};
  std::vector<KBWord> work;
  for (const auto& im : images) work.push_back(im.kb);
  KBWord conj(n);

  for (int k = 1; k <= n - 1; ++k) {
    const Permutation sk = Permutation::adjacent(n, k);
    KBWord ak = simplify_capped(work[k - 1], budget, 200);
    {  // phi(s_k)^2 = 1 must hold: s_k(a_k) = a_k^{-1}
      EqVerdict inv = kb_trivial(perm_act_kb(sk, ak).concat(ak), budget);
      if (inv.distinct())
        throw std::invalid_argument("straighten: phi(s_" + std::to_string(k) +
                                    ")^2 != 1 (" + inv.witness + ")");
      if (inv.unknown()) return std::nullopt;
    }
    GeneratorSubset Xk = k <= 2 ? GeneratorSubset::full(n) : s_tail(n, k);
    if (k >= 3 && !ak.support().subset_of(Xk)) {
      auto moved = eliminate_to_support(ak, Xk, budget);
      if (!moved) {
        // distinguish a violated commutation relation from plain budget exhaustion
        for (int l = 1; l <= k - 2; ++l) {
          EqVerdict comm =
              kb_equal(perm_act_kb(Permutation::adjacent(n, l), ak), ak, budget);
          if (comm.distinct())
            throw std::invalid_argument("straighten: phi(s_" + std::to_string(k) +
                                        ") fails to commute with tau_" + std::to_string(l));
        }
        return std::nullopt;
      }
      ak = *moved;
    }
    auto bk = transposition_twisted_decompose(ak, Xk, k, k + 1, budget);
    if (!bk) return std::nullopt;
    KBWord step(n);
    if (k == 1) {
      step = *bk;
    } else {
      GeneratorSubset Xprev = k == 2 ? GeneratorSubset::full(n) : s_tail(n, k - 1);
      auto split = hexagon_decompose_at(*bk, Xprev, k - 1, budget);
      if (!split) return std::nullopt;
      auto moved = eliminate_to_support(split->first, s_tail(n, k + 1), budget);
      if (!moved) return std::nullopt;
      step = *moved;
    }
    const KBWord step_inv = step.inverse();
    for (int i = 1; i <= n - 1; ++i) {
      KBWord conjugated = step_inv.concat(work[i - 1])
                              .concat(perm_act_kb(Permutation::adjacent(n, i), step));
      work[i - 1] = simplify_capped(conjugated, budget, 200);
    }
    EqVerdict fixed = kb_trivial(work[k - 1], budget);
    if (fixed.distinct()) throw std::logic_error("straighten: step failed to straighten phi(s_k)");
    if (fixed.unknown()) return std::nullopt;
    work[k - 1] = KBWord(n);
    conj = conj.concat(step);
  }
  // final verification over the original images
  for (int i = 1; i <= n - 1; ++i) {
    KBWord check =
        conj.inverse().concat(images[i - 1].kb).concat(perm_act_kb(images[i - 1].perm, conj));
    EqVerdict v = kb_trivial(check, budget);
    if (v.distinct()) throw std::logic_error("straighten: final verification failed");
    if (v.unknown()) return std::nullopt;
  }
  return simplify_capped(conj, budget, 200);
}

}  // namespace vbw
