#include "vbw/kbeq.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "vbw/amalgam.hpp"

namespace vbw {

std::string EqVerdict::to_json() const {
  nlohmann::json j;
  j["outcome"] = outcome == EqOutcome::Equal      ? "equal"
                 : outcome == EqOutcome::Distinct ? "distinct"
                                                  : "unknown";
  j["certificate"] = certificate.empty() ? nlohmann::json() : nlohmann::json(certificate);
  j["witness"] = witness.empty() ? nlohmann::json() : nlohmann::json(witness);
  j["budget_spent"] = budget_spent;
  return j.dump();
}

// ---------------------------------------------------------------------------
// Tier 2: right-angled normal form.

namespace {

bool letters_commute(const DeltaGen& a, const DeltaGen& b) {
  return a != b && kb_coxeter_entry(a, b) == 2;
}

// Shuffle-cancellation: delete x ... x^{-1} whenever everything in between
// commutes with x (same-generator letters pass through each other).
std::vector<KBLetter> shuffle_reduce(std::vector<KBLetter> ls) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p < ls.size() && !changed; ++p) {
      for (size_t q = p + 1; q < ls.size(); ++q) {
        if (ls[q].gen == ls[p].gen) {
          if (ls[q].exp == -ls[p].exp) {
            ls.erase(ls.begin() + q);
            ls.erase(ls.begin() + p);
            changed = true;
          }
          break;
        }
        if (!letters_commute(ls[q].gen, ls[p].gen)) break;
      }
    }
  }
  return ls;
}

}  // namespace

KBWord raag_normal_form(const KBWord& u, const GeneratorSubset& X) {
  if (!u.support().subset_of(X))
    throw std::invalid_argument("raag_normal_form: support not contained in X");
  const auto& gens = X.members();
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (kb_coxeter_entry(gens[a], gens[b]) == 3)
        throw std::invalid_argument("raag_normal_form: submatrix has a 3-entry");

  std::vector<KBLetter> ls = shuffle_reduce(u.letters());

  // Lexicographic linearization of the trace: repeatedly emit the least
  // letter among those with no earlier dependent letter still pending.
  auto dependent = [](const KBLetter& x, const KBLetter& y) {
    return x.gen == y.gen || kb_coxeter_entry(x.gen, y.gen) != 2;
  };
  std::vector<KBLetter> out;
  std::vector<bool> used(ls.size(), false);
  for (size_t step = 0; step < ls.size(); ++step) {
    int best = -1;
    for (size_t p = 0; p < ls.size(); ++p) {
      if (used[p]) continue;
      bool ready = true;
      for (size_t q = 0; q < p && ready; ++q)
        if (!used[q] && dependent(ls[p], ls[q])) ready = false;
      if (ready && (best < 0 || ls[p] < ls[best])) best = static_cast<int>(p);
    }
    out.push_back(ls[best]);
    used[best] = true;
  }
  return KBWord(u.strands(), out);
}

// ---------------------------------------------------------------------------
// Tier 3: Garside normal form in <a,b | aba = bab>.
//
// Simples are the left divisors of Delta = aba, encoded
//   0 = 1, 1 = a, 2 = b, 3 = ab, 4 = ba, 5 = Delta.
// Negative letters are absorbed via x^{-1} = Delta^{-1} psi(x) with
// psi(a) = ab, psi(b) = ba, and Delta^{-1} w Delta = phi(w) (a <-> b).

namespace {

// mult[s][t]: the simple s*t, or -1 when s*t is not simple.
constexpr int kSimpleMult[6][6] = {
    {0, 1, 2, 3, 4, 5},     {1, -1, 3, -1, 5, -1}, {2, 4, -1, 5, -1, -1},
    {3, 5, -1, -1, -1, -1}, {4, -1, 5, -1, -1, -1}, {5, -1, -1, -1, -1, -1}};

// left_comp[s][t]: c with s = t*c, or -1 when t does not left-divide s.
constexpr int kLeftComp[6][6] = {{0, -1, -1, -1, -1, -1}, {1, 0, -1, -1, -1, -1},
                                 {2, -1, 0, -1, -1, -1},  {3, 2, -1, 0, -1, -1},
                                 {4, -1, 1, -1, 0, -1},   {5, 4, 3, 1, 2, 0}};

constexpr int kPhi[6] = {0, 2, 1, 4, 3, 5};      // conjugation by Delta
constexpr int kSimpleLen[6] = {0, 1, 1, 2, 2, 3};
// simples ordered by decreasing length, for the greedy step
constexpr int kByLenDesc[6] = {5, 3, 4, 1, 2, 0};

const char* kSimpleName[6] = {"1", "a", "b", "ab", "ba", "D"};

}  // namespace

std::string DihedralNF::str() const {
  std::string out = "D^" + std::to_string(delta_power);
  for (int s : simples) out += std::string(" ") + kSimpleName[s];
  return out;
}

DihedralNF dihedral_normal_form(const KBWord& u, const DeltaGen& a, const DeltaGen& b) {
  if (kb_coxeter_entry(a, b) != 3)
    throw std::invalid_argument("dihedral_normal_form: pair is not braid-related");
  int p = 0;
  std::vector<int> w;  // positive word as letter simples
  for (const auto& l : u.letters()) {
    int x = l.gen == a ? 1 : l.gen == b ? 2 : -1;
    if (x < 0) throw std::invalid_argument("dihedral_normal_form: support outside the pair");
    if (l.exp > 0) {
      w.push_back(x);
    } else {
      --p;
      for (int& s : w) s = kPhi[s];
      w.push_back(x == 1 ? 3 : 4);  // psi(a) = ab, psi(b) = ba
    }
  }
  // left-greedy: slide the largest simple left-divisor of each factor into
  // its left neighbour until every adjacent pair is left-weighted
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      const int s = w[i], t = w[i + 1];
      for (int u : kByLenDesc) {
        if (kSimpleLen[u] == 0) break;
        const int c = kLeftComp[t][u];
        if (c < 0) continue;
        const int m = kSimpleMult[s][u];
        if (m < 0) continue;
        w[i] = m;
        w[i + 1] = c;
        changed = true;
        break;
      }
    }
    std::erase(w, 0);
  }
  // all Delta factors sit at the front after the greedy pass
  size_t lead = 0;
  while (lead < w.size() && w[lead] == 5) ++lead;
  DihedralNF nf;
  nf.delta_power = p + static_cast<int>(lead);
  nf.simples.assign(w.begin() + lead, w.end());
  return nf;
}

// ---------------------------------------------------------------------------
// Bounded rewriting: best-first search over sound moves.

namespace {

std::vector<KBWord> rewrite_neighbors(const KBWord& w) {
  std::vector<KBWord> out;
  const auto& ls = w.letters();
  const int n = w.strands();
  for (size_t p = 0; p + 1 < ls.size(); ++p) {
    if (letters_commute(ls[p].gen, ls[p + 1].gen)) {
      auto v = ls;
      std::swap(v[p], v[p + 1]);
      out.push_back(KBWord(n, v));
    }
  }
  // braid rewrites x y x ~ y x y for m = 3 pairs, in the six sign patterns
  // that stay length 3 (derived from aba = bab)
  for (size_t p = 0; p + 2 < ls.size(); ++p) {
    const auto &l0 = ls[p], &l1 = ls[p + 1], &l2 = ls[p + 2];
    if (l0.gen != l2.gen || l0.gen == l1.gen) continue;
    if (kb_coxeter_entry(l0.gen, l1.gen) != 3) continue;
    const int e0 = l0.exp, e1 = l1.exp, e2 = l2.exp;
    // (e0,e1,e2) over (x,y,x) -> signs over (y,x,y)
    int f0 = 0, f1 = 0, f2 = 0;
    if (e0 == 1 && e1 == 1 && e2 == 1) f0 = 1, f1 = 1, f2 = 1;          // xyx = yxy
    else if (e0 == 1 && e1 == 1 && e2 == -1) f0 = -1, f1 = 1, f2 = 1;   // xyx' = y'xy
    else if (e0 == -1 && e1 == 1 && e2 == 1) f0 = 1, f1 = 1, f2 = -1;   // x'yx = yxy'
    else if (e0 == 1 && e1 == -1 && e2 == -1) f0 = -1, f1 = -1, f2 = 1; // xy'x' = y'x'y
    else if (e0 == -1 && e1 == -1 && e2 == 1) f0 = 1, f1 = -1, f2 = -1; // x'y'x = yx'y'
    else if (e0 == -1 && e1 == -1 && e2 == -1) f0 = -1, f1 = -1, f2 = -1;
    else continue;  // (+,-,+) and (-,+,-) have no length-3 image
    auto v = ls;
    v[p] = {l1.gen, f0};
    v[p + 1] = {l0.gen, f1};
    v[p + 2] = {l1.gen, f2};
    out.push_back(KBWord(n, v));
  }
  return out;
}

struct SearchScore {
  int outside;
  int length;
  std::string key;
  friend auto operator<=>(const SearchScore&, const SearchScore&) = default;
};

SearchScore score_word(const KBWord& w, const GeneratorSubset* X) {
  int outside = 0;
  if (X)
    for (const auto& l : w.letters())
      if (!X->contains(l.gen)) ++outside;
  return {outside, w.length(), w.str()};
}

// Best-first over the rewrite graph.  With a target X, stops at the first
// word supported in X; otherwise explores until the budget runs out and
// reports the best word seen.
std::pair<KBWord, bool> rewrite_search(const KBWord& start, const GeneratorSubset* X,
                                       Budget& budget) {
  auto goal = [&](const KBWord& w) { return X && score_word(w, X).outside == 0; };
  if (goal(start)) return {start, true};
  std::set<std::pair<SearchScore, KBWord>> frontier;
  std::set<std::string> visited;
  frontier.insert({score_word(start, X), start});
  visited.insert(start.str());
  KBWord best = start;
  SearchScore best_score = score_word(start, X);
  while (!frontier.empty()) {
    if (!budget.take()) break;
    auto [sc, w] = *frontier.begin();
    frontier.erase(frontier.begin());
    if (sc < best_score) {
      best_score = sc;
      best = w;
    }
    for (const auto& v : rewrite_neighbors(w)) {
      if (!visited.insert(v.str()).second) continue;
      if (goal(v)) return {v, true};
      frontier.insert({score_word(v, X), v});
    }
  }
  return {best, false};
}

}  // namespace

std::optional<KBWord> eliminate_to_support(const KBWord& w, const GeneratorSubset& X,
                                           Budget& budget) {
  auto [word, reached] = rewrite_search(w, &X, budget);
  if (reached) return word;
  return std::nullopt;
}

KBWord simplify_word(const KBWord& w, Budget& budget) {
  return rewrite_search(w, nullptr, budget).first;
}

// ---------------------------------------------------------------------------
// The tier cascade.

namespace {

EqVerdict tier_result(EqOutcome out, std::string cert, std::string wit, const Budget& b) {
  return {out, std::move(cert), std::move(wit), b.spent};
}

EqVerdict kb_trivial_impl(const KBWord& w, Budget& budget) {
  if (w.empty()) return tier_result(EqOutcome::Equal, "free reduction", "", budget);

  {  // tier 1: letterwise pi_P image and abelianization refute cheaply
    Permutation t = kb_transposition_image(w);
    if (!t.is_identity())
      return tier_result(EqOutcome::Distinct, "",
                         "letterwise transposition image " + t.str() + " != id", budget);
    const auto ab = kb_abelianize(w);
    const auto cls = kb_abelian_classes(w.strands());
    for (size_t c = 0; c < ab.size(); ++c)
      if (ab[c] != 0)
        return tier_result(EqOutcome::Distinct, "",
                           "abelianization: class of " + cls.class_keys[c].str() +
                               " has exponent sum " + std::to_string(ab[c]),
                           budget);
  }

  const GeneratorSubset X = w.support();
  const auto& gens = X.members();

  {  // tier 2: right-angled fragment
    bool right_angled = true;
    for (size_t a = 0; a < gens.size() && right_angled; ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        if (kb_coxeter_entry(gens[a], gens[b]) == 3) {
          right_angled = false;
          break;
        }
    if (right_angled) {
      KBWord nf = raag_normal_form(w, X);
      if (nf.empty()) return tier_result(EqOutcome::Equal, "tier2: raag normal form", "", budget);
      return tier_result(EqOutcome::Distinct, "", "tier2: raag normal form is " + nf.str(), budget);
    }
  }

  if (gens.size() == 2 && kb_coxeter_entry(gens[0], gens[1]) == 3) {  // tier 3
    DihedralNF nf = dihedral_normal_form(w, gens[0], gens[1]);
    if (nf.trivial())
      return tier_result(EqOutcome::Equal, "tier3: dihedral normal form", "", budget);
    return tier_result(EqOutcome::Distinct, "",
                       "tier3: dihedral normal form is " + nf.str() + " over {" +
                           gens[0].str() + "," + gens[1].str() + "}",
                       budget);
  }

  {  // tier 4: free-product split along infinity components
    auto comps = infinity_components(X);
    if (comps.size() >= 2) {
      auto component_of = [&](const DeltaGen& g) {
        for (size_t c = 0; c < comps.size(); ++c)
          if (comps[c].contains(g)) return static_cast<int>(c) + 1;
        throw std::logic_error("tier4: generator outside all components");
      };
      const int n = w.strands();
      AmalgamOracles<KBWord> o;
      o.factor_count = static_cast<int>(comps.size());
      o.identity = KBWord(n);
      o.mul = [](const KBWord& a, const KBWord& b) { return a.concat(b); };
      o.inv = [](const KBWord& a) { return a.inverse(); };
      o.eq = [](const KBWord& a, const KBWord& b) { return a == b; };
      o.theta_beta = [&budget, n](int, const KBWord& g)
          -> std::optional<std::pair<KBWord, KBWord>> {
        EqVerdict v = kb_trivial_impl(g, budget);
        if (v.unknown()) return std::nullopt;
        return std::make_pair(v.equal() ? KBWord(n) : g, KBWord(n));
      };
      o.syllabify = [&](const KBWord& g) {
        std::vector<std::pair<int, KBWord>> out;
        std::vector<KBLetter> cur;
        int cur_f = 0;
        for (const auto& l : g.letters()) {
          int f = component_of(l.gen);
          if (f != cur_f && cur_f != 0) {
            out.push_back({cur_f, KBWord(n, cur)});
            cur.clear();
          }
          cur_f = f;
          cur.push_back(l);
        }
        if (cur_f != 0) out.push_back({cur_f, KBWord(n, cur)});
        return out;
      };
      auto nf = amalgam_nf_of(o, w);
      if (nf) {
        if (nf->length() == 0)
          return tier_result(EqOutcome::Equal, "tier4: amalgam normal form has no syllables", "",
                             budget);
        return tier_result(EqOutcome::Distinct, "",
                           "tier4: amalgam normal form has " + std::to_string(nf->length()) +
                               " syllables, first " + nf->syllables.front().second.str(),
                           budget);
      }
      // factor oracle ran out of budget: fall through to tier 5
    }
  }

  {  // tier 5: bounded rewriting toward the empty word
    GeneratorSubset empty(w.strands());
    auto reduced = eliminate_to_support(w, empty, budget);
    if (reduced && reduced->empty())
      return tier_result(EqOutcome::Equal, "tier5: rewrite path to the empty word", "", budget);
  }
  return tier_result(EqOutcome::Unknown, "", "", budget);
}

}  // namespace

EqVerdict kb_trivial(const KBWord& w, Budget& budget) { return kb_trivial_impl(w, budget); }

EqVerdict kb_trivial(const KBWord& w, long budget) {
  Budget b{budget, 0};
  return kb_trivial_impl(w, b);
}

EqVerdict kb_equal(const KBWord& u, const KBWord& v, Budget& budget) {
  if (u.strands() != v.strands()) throw std::invalid_argument("kb_equal: strand count mismatch");
  return kb_trivial_impl(u.concat(v.inverse()), budget);
}

EqVerdict kb_equal(const KBWord& u, const KBWord& v, long budget) {
  Budget b{budget, 0};
  return kb_equal(u, v, b);
}

}  // namespace vbw
