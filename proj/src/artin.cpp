#include "vbw/artin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vbw {

int kb_coxeter_entry(const DeltaGen& a, const DeltaGen& b) {
  if (a == b) return 1;
  const bool disjoint = a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
  if (disjoint) return 2;
  // chain delta_{i,j}, delta_{j,k} in either order, i,j,k pairwise distinct
  if (a.j == b.i && a.i != b.j) return 3;
  if (b.j == a.i && b.i != a.j) return 3;
  return cox_infinity;
}

GeneratorSubset::GeneratorSubset(int n, std::vector<DeltaGen> members) : n_(n) {
  for (const auto& g : members) insert(g);
}

GeneratorSubset GeneratorSubset::full(int n) {
  GeneratorSubset X(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) X.insert({i, j});
  return X;
}

bool GeneratorSubset::contains(const DeltaGen& g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

void GeneratorSubset::insert(const DeltaGen& g) {
  if (g.i == g.j || g.i < 1 || g.j < 1 || g.i > n_ || g.j > n_)
    throw std::invalid_argument("GeneratorSubset: bad generator " + g.str());
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it == members_.end() || *it != g) members_.insert(it, g);
}

GeneratorSubset GeneratorSubset::intersect(const GeneratorSubset& o) const {
  GeneratorSubset out(n_);
  for (const auto& g : members_)
    if (o.contains(g)) out.insert(g);
  return out;
}

GeneratorSubset GeneratorSubset::unite(const GeneratorSubset& o) const {
  GeneratorSubset out = *this;
  for (const auto& g : o.members_) out.insert(g);
  return out;
}

GeneratorSubset GeneratorSubset::minus(const GeneratorSubset& o) const {
  GeneratorSubset out(n_);
  for (const auto& g : members_)
    if (!o.contains(g)) out.insert(g);
  return out;
}

bool GeneratorSubset::subset_of(const GeneratorSubset& o) const {
  for (const auto& g : members_)
    if (!o.contains(g)) return false;
  return true;
}

GeneratorSubset GeneratorSubset::apply(const Permutation& w) const {
  if (w.degree() != n_) throw std::invalid_argument("GeneratorSubset::apply: degree mismatch");
  GeneratorSubset out(n_);
  for (const auto& g : members_) out.insert({w.apply(g.i), w.apply(g.j)});
  return out;
}

bool GeneratorSubset::invariant_under(const Permutation& w) const { return apply(w) == *this; }

std::string GeneratorSubset::str() const {
  std::string out = "{";
  for (size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ", ";
    out += members_[k].str();
  }
  return out + "}";
}

CoxeterMatrix::CoxeterMatrix(std::vector<DeltaGen> labels,
                             const std::function<int(const DeltaGen&, const DeltaGen&)>& entry_fn)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  const size_t k = labels_.size();
  entries_.resize(k * k);
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) entries_[a * k + b] = entry_fn(labels_[a], labels_[b]);
  for (size_t a = 0; a < k; ++a) {
    if (entry(a, a) != 1) throw std::invalid_argument("CoxeterMatrix: diagonal must be 1");
    for (size_t b = 0; b < k; ++b) {
      if (entry(a, b) != entry(b, a)) throw std::invalid_argument("CoxeterMatrix: not symmetric");
      if (a != b && entry(a, b) != 2 && entry(a, b) != 3 && entry(a, b) != cox_infinity)
        throw std::invalid_argument("CoxeterMatrix: off-diagonal entry not in {2,3,inf}");
    }
  }
}

int CoxeterMatrix::entry(const DeltaGen& a, const DeltaGen& b) const {
  auto ia = std::lower_bound(labels_.begin(), labels_.end(), a);
  auto ib = std::lower_bound(labels_.begin(), labels_.end(), b);
  if (ia == labels_.end() || *ia != a || ib == labels_.end() || *ib != b)
    throw std::invalid_argument("CoxeterMatrix::entry: label not present");
  return entry(static_cast<int>(ia - labels_.begin()), static_cast<int>(ib - labels_.begin()));
}

CoxeterMatrix CoxeterMatrix::submatrix(const GeneratorSubset& X) const {
  std::vector<DeltaGen> labels;
  for (const auto& g : X.members()) labels.push_back(g);
  return CoxeterMatrix(labels, [this](const DeltaGen& a, const DeltaGen& b) { return entry(a, b); });
}

CoxeterMatrix kb_coxeter_matrix(int n) { return kb_coxeter_matrix(GeneratorSubset::full(n)); }

CoxeterMatrix kb_coxeter_matrix(const GeneratorSubset& X) {
  return CoxeterMatrix(X.members(), kb_coxeter_entry);
}

std::vector<GeneratorSubset> infinity_components(const GeneratorSubset& X) {
  const auto& gens = X.members();
  const int k = static_cast<int>(gens.size());
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int start = 0; start < k; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < k; ++b)
        if (comp[b] == -1 && kb_coxeter_entry(gens[a], gens[b]) != cox_infinity) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  std::vector<GeneratorSubset> out(ncomp, GeneratorSubset(X.degree()));
  for (int a = 0; a < k; ++a) out[comp[a]].insert(gens[a]);
  return out;
}

std::optional<InfinitySplit> infinity_split(const GeneratorSubset& X) {
  if (X.empty()) throw std::invalid_argument("infinity_split: X must be nonempty");
  auto comps = infinity_components(X);
  if (comps.size() < 2) return std::nullopt;
  // components are ordered by least member, so comps[0] holds the lex-least
  GeneratorSubset x2(X.degree());
  for (size_t c = 1; c < comps.size(); ++c) x2 = x2.unite(comps[c]);
  return InfinitySplit{comps[0], x2, GeneratorSubset(X.degree())};
}

GeneratorSubset fixed_generator_subset(const GeneratorSubset& X, int k) {
  const int n = X.degree();
  if (k < 1 || k >= n) throw std::invalid_argument("fixed_generator_subset: k out of range");
  if (!X.invariant_under(Permutation::adjacent(n, k)))
    throw std::invalid_argument("fixed_generator_subset: X not s_k-invariant");
  GeneratorSubset out(n);
  for (const auto& g : X.members())
    if (g.i != k && g.i != k + 1 && g.j != k && g.j != k + 1) out.insert(g);
  return out;
}

}  // namespace vbw
