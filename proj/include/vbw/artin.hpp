#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vbw/perm.hpp"

namespace vbw {

// A standard generator delta_{i,j} of the Artin group KB_n, i != j.
struct DeltaGen {
  int i = 0;
  int j = 0;
  friend bool operator==(const DeltaGen&, const DeltaGen&) = default;
  friend auto operator<=>(const DeltaGen&, const DeltaGen&) = default;
  std::string str() const { return "d" + std::to_string(i) + "." + std::to_string(j); }
};

// Coxeter matrix entries live in {1, 2, 3, infinity}; 0 encodes infinity.
inline constexpr int cox_infinity = 0;

// Entry of the Coxeter matrix of KB_n over S = {delta_{i,j}}:
//   1 on the diagonal,
//   2 when the index pairs are disjoint,
//   3 for the chain pattern (delta_{i,j}, delta_{j,k}), i,j,k distinct,
//   infinity otherwise.
int kb_coxeter_entry(const DeltaGen& a, const DeltaGen& b);

// Subset of the generating set S = {delta_{i,j} | 1 <= i != j <= n}.
// Members are kept sorted by (i, j); value semantics throughout.
class GeneratorSubset {
public:
  explicit GeneratorSubset(int n) : n_(n) {}
  GeneratorSubset(int n, std::vector<DeltaGen> members);
  static GeneratorSubset full(int n);

  int degree() const { return n_; }
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(const DeltaGen& g) const;
  const std::vector<DeltaGen>& members() const { return members_; }

  void insert(const DeltaGen& g);
  GeneratorSubset intersect(const GeneratorSubset& o) const;
  GeneratorSubset unite(const GeneratorSubset& o) const;
  GeneratorSubset minus(const GeneratorSubset& o) const;
  bool subset_of(const GeneratorSubset& o) const;

  // Index action: delta_{i,j} -> delta_{w(i),w(j)}.
  GeneratorSubset apply(const Permutation& w) const;
  bool invariant_under(const Permutation& w) const;

  std::string str() const;  // "{d1.2, d2.1}"

  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;

private:
  int n_;
  std::vector<DeltaGen> members_;
};

// Explicit Coxeter matrix over a generator list; entries validated on
// construction (symmetric, 1 on the diagonal, off-diagonal in {2,3,inf}).
class CoxeterMatrix {
public:
  CoxeterMatrix(std::vector<DeltaGen> labels,
                const std::function<int(const DeltaGen&, const DeltaGen&)>& entry_fn);

  const std::vector<DeltaGen>& labels() const { return labels_; }
  int entry(int a, int b) const { return entries_[a * labels_.size() + b]; }
  int entry(const DeltaGen& a, const DeltaGen& b) const;
  CoxeterMatrix submatrix(const GeneratorSubset& X) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
  std::vector<DeltaGen> labels_;  // sorted
  std::vector<int> entries_;      // row-major
};

CoxeterMatrix kb_coxeter_matrix(int n);
CoxeterMatrix kb_coxeter_matrix(const GeneratorSubset& X);

// Connected components of the graph on X with an edge where m != infinity.
// Component order is by least member.
std::vector<GeneratorSubset> infinity_components(const GeneratorSubset& X);

struct InfinitySplit {
  GeneratorSubset x1, x2, base;
};

// If X splits as X1 u X2 with every cross entry infinite, return the split
// with X1 the component of the least member (base empty); otherwise nullopt.
std::optional<InfinitySplit> infinity_split(const GeneratorSubset& X);

// {delta_{i,j} in X | i, j not in {k, k+1}}; X must be s_k-invariant.
// Generates the subgroup of KB_n[X] fixed by the action of s_k.
GeneratorSubset fixed_generator_subset(const GeneratorSubset& X, int k);

}  // namespace vbw
