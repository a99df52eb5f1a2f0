#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vbw/artin.hpp"
#include "vbw/perm.hpp"

namespace vbw {

// ---------------------------------------------------------------------------
// Words over the virtual braid generators sigma_i, tau_i.
// tau letters are normalized to exponent +1 on construction (tau_i^2 = 1).
// Text tokens: "s3" = sigma_3, "s3'" = sigma_3^-1, "t2" = tau_2, "e" = empty.

struct VBLetter {
  enum Kind { Sigma, Tau } kind;
  int index;  // 1 .. n-1
  int exp;    // +1 or -1; always +1 for Tau
  friend bool operator==(const VBLetter&, const VBLetter&) = default;
};

class VBWord {
public:
  explicit VBWord(int n) : n_(n) {}
  VBWord(int n, std::vector<VBLetter> letters);
  static VBWord parse(const std::string& text, int n);

  int strands() const { return n_; }
  bool empty() const { return letters_.empty(); }
  const std::vector<VBLetter>& letters() const { return letters_; }

  VBWord concat(const VBWord& o) const;
  VBWord inverse() const;
  VBWord& append(VBLetter l);

  std::string str() const;
  friend bool operator==(const VBWord&, const VBWord&) = default;

private:
  int n_;
  std::vector<VBLetter> letters_;
};

// ---------------------------------------------------------------------------
// Words over the KB_n generators delta_{i,j}; kept freely reduced.
// Text tokens: "d1.2" = delta_{1,2}, "d1.2'" = its inverse, "e" = empty.

struct KBLetter {
  DeltaGen gen;
  int exp;  // +1 or -1
  friend bool operator==(const KBLetter&, const KBLetter&) = default;
  friend auto operator<=>(const KBLetter&, const KBLetter&) = default;
};

class KBWord {
public:
  KBWord() = default;  // degree-0 placeholder
  explicit KBWord(int n) : n_(n) {}
  KBWord(int n, std::vector<KBLetter> letters);  // freely reduces
  static KBWord parse(const std::string& text, int n);
  static KBWord single(int n, DeltaGen g, int exp = 1);

  int strands() const { return n_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<KBLetter>& letters() const { return letters_; }

  KBWord concat(const KBWord& o) const;
  KBWord inverse() const;
  KBWord pow(int k) const;
  GeneratorSubset support() const;

  std::string str() const;
  friend bool operator==(const KBWord&, const KBWord&) = default;
  friend auto operator<=>(const KBWord&, const KBWord&) = default;

private:
  int n_ = 0;
  std::vector<KBLetter> letters_;
};

// Index action of w on a word: delta_{i,j} -> delta_{w(i),w(j)} letterwise.
KBWord perm_act_kb(const Permutation& w, const KBWord& a);

// Defining word of delta_{i,j} over the sigma/tau generators:
//   i < j:  t_i t_{i+1} .. t_{j-2} s_{j-1} t_{j-2} .. t_i
//   i > j:  t_j t_{j+1} .. t_{i-2} t_{i-1} s_{i-1} t_{i-1} t_{i-2} .. t_j
VBWord expand_delta(int n, int i, int j);

// ---------------------------------------------------------------------------
// The semidirect decomposition VB_n = KB_n x| S_n.  An element is a pair
// (a, w) representing a * iota(w); multiplication (a,u)(b,v) = (a u(b), uv).

struct SemidirectElement {
  KBWord kb;
  Permutation perm;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
  std::string str() const;
};

SemidirectElement sd_identity(int n);
SemidirectElement sd_multiply(const SemidirectElement& x, const SemidirectElement& y);
SemidirectElement sd_inverse(const SemidirectElement& x);
SemidirectElement sd_conjugate(const KBWord& b, const SemidirectElement& x);  // b x b^-1

// Left-to-right fold of a sigma/tau word using tau_i -> (e, s_i) and
// sigma_i^e -> (delta_{i,i+1}^e, id).
SemidirectElement to_semidirect(const VBWord& w);

// Expansion of each delta letter followed by a tau word for the permutation.
VBWord from_semidirect(const SemidirectElement& x);

// ---------------------------------------------------------------------------
// Abelianizations.

// VB_n abelianizes to Z x Z/2: (sum of sigma exponents, parity of tau count).
std::pair<long, int> vb_abelianize(const VBWord& w);

// Generator classes of the abelianized KB_n, computed by union-find merging
// delta_{i,j} with delta_{j,k} over all pairwise-distinct triples (the
// abelianized braid relation).  Classes are keyed by their least member.
struct KBAbelianClasses {
  int n;
  std::vector<DeltaGen> class_keys;              // least member per class, sorted
  std::vector<std::vector<DeltaGen>> classes;    // parallel to class_keys
  int class_of(const DeltaGen& g) const;         // index into class_keys
};

KBAbelianClasses kb_abelian_classes(int n);

// Exponent sums per class; constant on KB_n-equal words.
std::vector<long> kb_abelianize(const KBWord& a);

// Letterwise transposition image delta_{i,j}^e -> (i,j): the restriction of
// pi_P to KB_n, and a cheap equality invariant.
Permutation kb_transposition_image(const KBWord& a);

// pi_K / pi_P images of a sigma/tau word.
Permutation pi_k(const VBWord& w);
Permutation pi_p(const VBWord& w);

}  // namespace vbw
