#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vbw/catalog.hpp"
#include "vbw/kbeq.hpp"
#include "vbw/vb.hpp"

using namespace vbw;

TEST_CASE("word parsing and normalization") {
  const VBWord w = VBWord::parse("s3 s3' t2 t2' e", 5);
  CHECK(w.letters().size() == 4);          // sigma pair kept, taus normalized to +1
  CHECK(w.letters()[2].exp == 1);
  CHECK(w.letters()[3].exp == 1);
  CHECK(VBWord::parse("e", 4).empty());
  CHECK_THROWS_AS(VBWord::parse("s4", 4), std::invalid_argument);
  CHECK_THROWS_AS(VBWord::parse("x1", 4), std::invalid_argument);

  const KBWord k = KBWord::parse("d1.2 d1.2' d3.4", 5);
  CHECK(k.length() == 1);  // free reduction on construction
  CHECK(k.str() == "d3.4");
  CHECK_THROWS_AS(KBWord::parse("d1.1", 4), std::invalid_argument);
  CHECK_THROWS_AS(KBWord::parse("d1.5", 4), std::invalid_argument);
}

TEST_CASE("expand_delta matches the defining words") {
  CHECK(expand_delta(4, 1, 2) == VBWord::parse("s1", 4));
  CHECK(expand_delta(4, 1, 3) == VBWord::parse("t1 s2 t1", 4));
  CHECK(expand_delta(4, 2, 1) == VBWord::parse("t1 s1 t1", 4));
  CHECK(expand_delta(5, 1, 4) == VBWord::parse("t1 t2 s3 t2 t1", 5));
  CHECK(expand_delta(5, 4, 1) == VBWord::parse("t1 t2 t3 s3 t3 t2 t1", 5));
  CHECK_THROWS_AS(expand_delta(4, 1, 5), std::invalid_argument);
}

TEST_CASE("delta words fold back to single letters") {
  for (int n : {3, 4, 5, 6})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const SemidirectElement e = to_semidirect(expand_delta(n, i, j));
        CHECK(e.perm.is_identity());
        CHECK(e.kb == KBWord::single(n, {i, j}));
        // pi_P of the defining word is the transposition (i, j)
        CHECK(pi_p(expand_delta(n, i, j)) == Permutation::transposition(n, i, j));
        CHECK(pi_k(expand_delta(n, i, j)).is_identity());
      }
}

TEST_CASE("index action on kb words") {
  const Permutation s1 = Permutation::adjacent(4, 1);
  CHECK(perm_act_kb(s1, KBWord::parse("d1.2", 4)) == KBWord::parse("d2.1", 4));
  const KBWord a = KBWord::parse("d1.2 d3.4 d2.3'", 4);
  CHECK(perm_act_kb(Permutation(4), a) == a);
  CHECK(perm_act_kb(Permutation::transposition(4, 1, 3), KBWord::parse("d1.2 d3.4", 4)) ==
        KBWord::parse("d3.2 d1.4", 4));
}

TEST_CASE("to_semidirect folds") {
  const SemidirectElement e1 = to_semidirect(VBWord::parse("t1 s1", 4));
  CHECK(e1.kb == KBWord::parse("d2.1", 4));
  CHECK(e1.perm == Permutation::adjacent(4, 1));

  CHECK(to_semidirect(VBWord::parse("s1 s1'", 4)) == sd_identity(4));
  // the mixed relation written as a relator folds to the identity
  CHECK(to_semidirect(VBWord::parse("t1 t2 s1 t2 t1 s2'", 4)) == sd_identity(4));
}

TEST_CASE("semidirect multiplication law") {
  const int n = 4;
  const SemidirectElement x{KBWord::parse("d1.2", n), Permutation::adjacent(n, 1)};
  const SemidirectElement sq = sd_multiply(x, x);
  CHECK(sq.kb == KBWord::parse("d1.2 d2.1", n));
  CHECK(sq.perm.is_identity());
  CHECK(sd_multiply(x, sd_identity(n)) == x);
  CHECK(sd_multiply(sd_identity(n), x) == x);
  const SemidirectElement xi = sd_inverse(x);
  CHECK(xi.kb == KBWord::parse("d2.1'", n));
  CHECK(xi.perm == Permutation::adjacent(n, 1));
  CHECK(sd_multiply(x, xi) == sd_identity(n));
  CHECK(sd_multiply(xi, x) == sd_identity(n));
}

TEST_CASE("sd_multiply associativity, randomized") {
  std::mt19937 rng(2024);
  const int n = 5;
  auto rand_el = [&] {
    std::vector<VBLetter> ls;
    for (int k = 0; k < 4; ++k) {
      int idx = 1 + static_cast<int>(rng() % (n - 1));
      if (rng() % 2)
        ls.push_back({VBLetter::Sigma, idx, rng() % 2 ? 1 : -1});
      else
        ls.push_back({VBLetter::Tau, idx, 1});
    }
    return to_semidirect(VBWord(n, ls));
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = rand_el(), b = rand_el(), c = rand_el();
    CHECK(sd_multiply(sd_multiply(a, b), c) == sd_multiply(a, sd_multiply(b, c)));
    CHECK(sd_multiply(a, sd_inverse(a)) == sd_identity(n));
  }
}

TEST_CASE("abelianization of VB words") {
  CHECK(vb_abelianize(VBWord::parse("s1", 4)) == std::make_pair(1L, 0));
  CHECK(vb_abelianize(VBWord::parse("t1", 4)) == std::make_pair(0L, 1));
  CHECK(vb_abelianize(VBWord::parse("e", 4)) == std::make_pair(0L, 0));
  CHECK(vb_abelianize(VBWord::parse("s1 t1 s2", 4)) == std::make_pair(2L, 1));
}

TEST_CASE("kb abelianization classes") {
  const auto c3 = kb_abelian_classes(3);
  CHECK(c3.class_keys.size() == 2);
  CHECK(c3.class_of({1, 2}) != c3.class_of({2, 1}));
  CHECK(c3.class_of({1, 2}) == c3.class_of({2, 3}));
  // at n >= 4 the chain relations connect everything
  CHECK(kb_abelian_classes(4).class_keys.size() == 1);
  CHECK(kb_abelian_classes(6).class_keys.size() == 1);

  // a braid relator abelianizes to zero
  const KBWord rel = KBWord::parse("d1.2 d2.3 d1.2 d2.3' d1.2' d2.3'", 3);
  for (long v : kb_abelianize(rel)) CHECK(v == 0);
  const auto ab = kb_abelianize(KBWord::parse("d1.2 d2.1", 3));
  CHECK(ab[c3.class_of({1, 2})] == 1);
  CHECK(ab[c3.class_of({2, 1})] == 1);
}

TEST_CASE("round trip through the semidirect form preserves the invariants") {
  std::mt19937 rng(555);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<VBLetter> ls;
    const int len = static_cast<int>(rng() % 10);
    for (int k = 0; k < len; ++k) {
      int idx = 1 + static_cast<int>(rng() % (n - 1));
      if (rng() % 2)
        ls.push_back({VBLetter::Sigma, idx, rng() % 2 ? 1 : -1});
      else
        ls.push_back({VBLetter::Tau, idx, 1});
    }
    const VBWord w(n, ls);
    const VBWord back = from_semidirect(to_semidirect(w));
    CHECK(pi_p(back) == pi_p(w));
    CHECK(pi_k(back) == pi_k(w));
    CHECK(vb_abelianize(back) == vb_abelianize(w));
  }
}

TEST_CASE("defining relators fold to certified-trivial kb parts") {
  for (int n : {3, 4, 5}) {
    for (const auto& r : vb_relators(n)) {
      const SemidirectElement e = to_semidirect(r);
      CHECK(e.perm.is_identity());
      CHECK(kb_trivial(e.kb).equal());
    }
  }
}
