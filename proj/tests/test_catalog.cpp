#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vbw/catalog.hpp"

using namespace vbw;

TEST_CASE("projection images on generators") {
  const int n = 5;
  const CatalogHom piK = make_catalog_hom("piK", n);
  const CatalogHom piP = make_catalog_hom("piP", n);
  CHECK(piK.eval(VBWord::parse("s1", n)).perm.is_identity());
  CHECK(piK.eval(VBWord::parse("t1", n)).perm == Permutation::adjacent(n, 1));
  CHECK(piP.eval(VBWord::parse("s1", n)).perm == Permutation::adjacent(n, 1));
  CHECK(piP.eval(VBWord::parse("t1 s2 t1", n)).perm == Permutation::parse("(1,3)", n));
}

TEST_CASE("zeta images on generators") {
  const int n = 5;
  const CatalogHom z2 = make_catalog_hom("zeta2", n);
  const GroupElement e = z2.eval(VBWord::parse("s1", n));
  CHECK(e.sd.perm.is_identity());
  CHECK(e.sd.kb == KBWord::parse("d1.2'", n));
  const CatalogHom z1 = make_catalog_hom("zeta1", n);
  const GroupElement e1 = z1.eval(VBWord::parse("s1", n));
  CHECK(e1.sd.kb == KBWord::parse("d2.1", n));
  CHECK(e1.sd == to_semidirect(VBWord::parse("t1 s1 t1", n)));
}

TEST_CASE("iota is well defined on braid-equivalent words") {
  const int n = 4;
  const CatalogHom iota = make_catalog_hom("iota", n);
  const GroupElement lhs = iota.eval_sym_word({1, 2, 1});
  const GroupElement rhs = iota.eval_sym_word({2, 1, 2});
  CHECK(lhs.sd == rhs.sd);
  CHECK(lhs.sd.perm == Permutation::parse("(1,3)", n));
  CHECK(lhs.sd.kb.empty());
}

TEST_CASE("every catalog hom verifies against its source presentation") {
  for (int n : {3, 4, 5, 6})
    for (const auto& name : catalog_hom_names(n)) {
      CAPTURE(n);
      CAPTURE(name);
      CHECK_NOTHROW(make_catalog_hom(name, n));
    }
  CHECK_THROWS_AS(make_catalog_hom("nu6", 5), std::invalid_argument);
  CHECK_THROWS_AS(make_catalog_hom("bogus", 5), std::invalid_argument);
}

TEST_CASE("a corrupted hom fails verification") {
  CatalogHom h = make_catalog_hom("piP", 4);
  h.images_a[0] = GroupElement::sym(Permutation::parse("(1,2,3)", 4));  // not an involution image
  const HomVerification v = verify_catalog_hom(h);
  CHECK(!v.ok);
  CHECK(!v.unknown);
  CHECK(!v.failed_relator.empty());
}

TEST_CASE("nu6 composites evaluate through the exceptional images") {
  const CatalogHom nk = make_catalog_hom("nu6.piK", 6);
  CHECK(nk.eval(VBWord::parse("s1", 6)).perm.is_identity());
  CHECK(nk.eval(VBWord::parse("t1", 6)).perm == nu6_images()[0]);
  const CatalogHom np = make_catalog_hom("nu6.piP", 6);
  CHECK(np.eval(VBWord::parse("s3", 6)).perm == nu6_images()[2]);
}

TEST_CASE("the eight self-maps of VB_6 are pairwise distinguished") {
  const std::vector<std::string> names = {"id",       "zeta1",    "zeta2",        "zeta1.zeta2",
                                          "iota.piK", "iota.piP", "iota.nu6.piK", "iota.nu6.piP"};
  std::vector<CatalogHom> homs;
  for (const auto& s : names) homs.push_back(make_catalog_hom(s, 6));
  for (size_t a = 0; a < homs.size(); ++a)
    for (size_t b = a + 1; b < homs.size(); ++b) {
      CAPTURE(names[a]);
      CAPTURE(names[b]);
      CHECK(!distinguish_homs(homs[a], homs[b]).empty());
    }
}

TEST_CASE("element_trivial goes through the kb oracle") {
  Budget b{kDefaultBudget, 0};
  const GroupElement x = GroupElement::vb(to_semidirect(VBWord::parse("s1 t1 s1 t1", 4)));
  // sigma_1 tau_1 sigma_1 tau_1 = (d1.2 d2.1, id): nontrivial kb part
  CHECK(element_trivial(x, b).distinct());
  const GroupElement y = GroupElement::vb(to_semidirect(VBWord::parse("s1 s1'", 4)));
  Budget b2{kDefaultBudget, 0};
  CHECK(element_trivial(y, b2).equal());
}
