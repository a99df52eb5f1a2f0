#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vbw/catalog.hpp"
#include "vbw/homsearch.hpp"

using namespace vbw;

TEST_CASE("S_3 -> S_3: ten raw homomorphisms in three classes") {
  const ClassifyReport rep = enumerate_homs(FinitePresentation::symmetric(3), 3);
  CHECK(rep.raw_count == 10);
  CHECK(rep.classes.size() == 3);
}

TEST_CASE("trivial target admits exactly one homomorphism") {
  const ClassifyReport rep = enumerate_homs(FinitePresentation::symmetric(5), 1);
  CHECK(rep.raw_count == 1);
  CHECK(rep.classes.size() == 1);
  CHECK(rep.classes[0].tag == "abelian");
}

TEST_CASE("classify sym5 -> sym5 reproduces the sym catalog") {
  const ClassifyReport rep = classify_sym_to_sym(5, 5);
  CHECK(rep.certified);
  CHECK(rep.catalog_match);
  CHECK(rep.classes.size() == 4);  // trivial, 2^1, 2^2, identity
  CHECK(rep.count_tag("identity") == 1);
  CHECK(rep.count_tag("abelian") == 3);
  CHECK(rep.count_tag("other") == 0);
}

TEST_CASE("classify sym5 -> sym4 is abelian only") {
  const ClassifyReport rep = classify_sym_to_sym(5, 4);
  CHECK(rep.certified);
  CHECK(rep.catalog_match);
  CHECK(rep.count_tag("abelian") == static_cast<long>(rep.classes.size()));
}

TEST_CASE("classify sym6 -> sym6 finds the exceptional class") {
  const ClassifyReport rep = classify_sym_to_sym(6, 6);
  CHECK(rep.certified);
  CHECK(rep.catalog_match);
  CHECK(rep.count_tag("identity") == 1);
  CHECK(rep.count_tag("nu6") == 1);
  CHECK(rep.count_tag("abelian") == 4);  // trivial, 2^1, 2^2, 2^3
}

TEST_CASE("classify vb5 -> symM reproduces the VB catalog") {
  for (int m = 2; m <= 4; ++m) {
    const ClassifyReport rep = classify_vb_to_sym(5, m);
    CAPTURE(m);
    CHECK(rep.certified);
    CHECK(rep.catalog_match);
    CHECK(rep.count_tag("abelian") == static_cast<long>(rep.classes.size()));
  }
  const ClassifyReport rep = classify_vb_to_sym(5, 5);
  CHECK(rep.certified);
  CHECK(rep.catalog_match);
  CHECK(rep.count_tag("piK") == 1);
  CHECK(rep.count_tag("piP") == 1);
  CHECK(rep.count_tag("other") == 0);
  CHECK(rep.count_tag("nu6.piK") == 0);
}

TEST_CASE("jobs do not change the classification output") {
  ClassifyOptions serial, parallel;
  parallel.jobs = 4;
  const ClassifyReport a = classify_vb_to_sym(5, 5, serial);
  const ClassifyReport b = classify_vb_to_sym(5, 5, parallel);
  REQUIRE(a.classes.size() == b.classes.size());
  for (size_t k = 0; k < a.classes.size(); ++k) {
    CHECK(a.classes[k].tag == b.classes[k].tag);
    CHECK(a.classes[k].images == b.classes[k].images);
  }
  CHECK(a.raw_count == b.raw_count);
}

TEST_CASE("exploratory degrees run uncertified") {
  const ClassifyReport rep = classify_vb_to_sym(3, 3);
  CHECK(!rep.certified);
  REQUIRE(!rep.notes.empty());
  CHECK(rep.notes[0].find("uncertified") != std::string::npos);
}

TEST_CASE("every emitted class satisfies all relators post hoc") {
  const FinitePresentation P = FinitePresentation::virtual_braid(5);
  const ClassifyReport rep = classify_vb_to_sym(5, 5);
  for (const auto& cls : rep.classes) {
    for (const auto& r : P.relators) {
      Permutation acc(5);
      for (int g : r) {
        const Permutation& img = cls.images[std::abs(g) - 1];
        acc = compose(acc, g > 0 ? img : img.inverse());
      }
      CHECK(acc.is_identity());
    }
  }
}

TEST_CASE("emitted representatives are canonical under conjugation") {
  std::mt19937 rng(11);
  const ClassifyReport rep = classify_sym_to_sym(5, 5);
  const auto all = all_permutations(5);
  for (const auto& cls : rep.classes) {
    const Permutation g = all[rng() % all.size()];
    std::vector<Permutation> conj;
    for (const auto& x : cls.images) conj.push_back(compose(compose(g, x), g.inverse()));
    CHECK(canonical_tuple(conj, 5) == cls.images);
  }
}

TEST_CASE("node budget exhaustion is a hard error") {
  ClassifyOptions opts;
  opts.max_nodes = 3;
  CHECK_THROWS_AS(enumerate_homs(FinitePresentation::symmetric(5), 5, opts), std::runtime_error);
}

TEST_CASE("report serializes to JSON") {
  const ClassifyReport rep = classify_sym_to_sym(5, 2);
  const std::string j = rep.to_json();
  CHECK(j.find("\"source\": \"sym5\"") != std::string::npos);
  CHECK(j.find("\"certified\": true") != std::string::npos);
}
