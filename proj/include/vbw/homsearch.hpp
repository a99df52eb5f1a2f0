#pragma once

#include <string>
#include <vector>

#include "vbw/perm.hpp"

namespace vbw {

// A finite presentation with abstract generators 1..generators; relators are
// signed generator words.  For virtual_braid(n) the generator order is
// sigma_1..sigma_{n-1}, tau_1..tau_{n-1}.
struct FinitePresentation {
  std::string name;
  int generators = 0;
  std::vector<std::vector<int>> relators;

  static FinitePresentation symmetric(int n);
  static FinitePresentation virtual_braid(int n);
};

struct HomClass {
  std::string tag;     // abelian | identity | nu6 | piK | piP | nu6.piK | nu6.piP | other
  std::string detail;  // e.g. "trivial" or the involution cycle type for abelian classes
  std::vector<Permutation> images;  // canonical tuple, generator order of the presentation
  long orbit_size = 0;              // number of raw homomorphisms in the class
};

struct ClassifyOptions {
  long max_nodes = 200000000;  // backtracking nodes before the run aborts
  int jobs = 1;                // worker threads; output independent of the value
};

struct ClassifyReport {
  std::string source;
  int target_degree = 0;
  std::vector<HomClass> classes;
  long raw_count = 0;
  bool certified = false;      // complete search in the certified (n, m) range
  bool catalog_match = false;  // classes match the expected catalog (certified runs)
  std::vector<std::string> notes;
  double seconds = 0.0;
  std::string to_json() const;

  long count_tag(const std::string& tag) const;
};

// Complete list of homomorphisms P -> S_m up to conjugacy: backtracking over
// generator images with incremental relator checking, first generator
// restricted to conjugacy class representatives, exact dedup through
// canonical_tuple.  Raw count is recovered via orbit sizes.  m <= 6.
ClassifyReport enumerate_homs(const FinitePresentation& P, int m,
                              const ClassifyOptions& opts = {});

// Classification with catalog labels.  Certified for 5 <= n <= 6, m <= n;
// n in {3, 4} runs in exploratory mode (uncertified, no catalog assertion).
ClassifyReport classify_sym_to_sym(int n, int m, const ClassifyOptions& opts = {});

// tau images are enumerated through classify_sym_to_sym, sigma_1 through the
// centralizer of the tau_3..tau_{n-1} images, and the remaining sigma images
// by the mixed relation; every candidate is re-verified against all relators.
ClassifyReport classify_vb_to_sym(int n, int m, const ClassifyOptions& opts = {});

}  // namespace vbw
