#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace vbw {

// Element of the symmetric group S_n in one-line form, 1-based.
// Composition convention everywhere: (p * q)(x) = p(q(x)), i.e. the right
// factor acts first.  This matches reading a product of generators
// s_{i1} s_{i2} ... as a function applied to points from the inside out.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);                    // identity on {1..n}
  explicit Permutation(std::vector<int> images);  // one-line form, 1-based

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation adjacent(int n, int i);            // s_i = (i, i+1)
  static Permutation transposition(int n, int a, int b);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // Accepts one-line "[2,1,3]", cycle form "(1,2)(3,4)", or "e"/"id".
  static Permutation parse(const std::string& text, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const;  // 1-based point
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles only

  std::string str() const;        // one-line "[2,1,3]"
  std::string cycle_str() const;  // "(1,2)(3,4)" or "e"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;  // images_[i-1] = w(i)
};

// (p * q)(x) = p(q(x)).  Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// All of S_n sorted by one-line form (lexicographic).  n <= 8.
std::vector<Permutation> all_permutations(int n);

// All g in S_n commuting with every generator; brute force, n <= 8.
// Result sorted by one-line form, always contains the identity.
std::vector<Permutation> centralizer(const std::vector<Permutation>& gens, int n);

// Lexicographically minimal (g t_1 g^-1, ..., g t_k g^-1) over g in S_m.
// Two tuples are simultaneously conjugate iff their canonical forms agree.
// Brute force over all m! conjugators, m <= 6.
std::vector<Permutation> canonical_tuple(const std::vector<Permutation>& tuple, int m);

// The generator images (u_1, ..., u_5) of the exceptional automorphism of
// S_6; checked against the S_6 Coxeter relations on first use.
const std::array<Permutation, 5>& nu6_images();

// One representative per conjugacy class of order-2 elements of S_m:
// products of k disjoint transpositions, k = 1 .. floor(m/2).
std::vector<Permutation> involution_class_reps(int m);

// Word in adjacent transpositions: p == s_{w[0]} * s_{w[1]} * ... (indices 1-based).
std::vector<int> adjacent_word(const Permutation& p);

}  // namespace vbw
