#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vbw/amalgam.hpp"

using namespace vbw;

namespace {
// letter ids: 1 = a (base), 2 = b, 3 = c
const int A = 1, B = 2, C = 3;

GWord w(std::vector<std::pair<int, int>> ls) { return GWord(std::move(ls)); }
}  // namespace

TEST_CASE("free product normal form keeps syllables apart") {
  auto o = make_free_amalgam({{B}, {C}}, {});
  // (b, c, b^-1): three syllables, trivial base
  auto nf = amalgam_normal_form(
      o, {{1, GWord::gen(B)}, {2, GWord::gen(C)}, {1, GWord::gen(B, -1)}});
  REQUIRE(nf.has_value());
  CHECK(nf->length() == 3);
  CHECK(nf->syllables[0].first == 1);
  CHECK(nf->syllables[1].first == 2);
  CHECK(nf->syllables[2].first == 1);
  CHECK(nf->base.empty());
}

TEST_CASE("amalgam over <a>: transversal fold from the defining recursion") {
  auto o = make_free_amalgam({{A, B}, {A, C}}, {A});
  // input (b a, c a^-1): theta_1 = b, theta_2 = a c, base = a^-1
  auto nf = amalgam_normal_form(
      o, {{1, w({{B, 1}, {A, 1}})}, {2, w({{C, 1}, {A, -1}})}});
  REQUIRE(nf.has_value());
  REQUIRE(nf->length() == 2);
  CHECK(nf->syllables[0].second == GWord::gen(B));
  CHECK(nf->syllables[1].second == w({{A, 1}, {C, 1}}));
  CHECK(nf->base == GWord::gen(A, -1));
}

TEST_CASE("base elements have syllable length zero") {
  auto o = make_free_amalgam({{A, B}, {A, C}}, {A});
  auto nf = amalgam_normal_form(o, {{1, GWord::gen(A).pow(3)}});
  REQUIRE(nf.has_value());
  CHECK(nf->length() == 0);
  CHECK(nf->base == GWord::gen(A).pow(3));
  // and in-base chunks collapse between proper syllables
  auto nf2 = amalgam_normal_form(
      o, {{1, GWord::gen(B)}, {1, w({{B, -1}, {A, 1}, {A, 1}})}, {2, GWord::gen(C)}});
  REQUIRE(nf2.has_value());
  CHECK(nf2->length() == 1);
  CHECK(nf2->syllables[0].first == 2);
}

TEST_CASE("swap fixed check") {
  auto o = make_free_amalgam({{A, B}, {A, C}}, {A});
  auto tau = make_letter_swap({{B, C}}, [](int j) { return j == 1 ? 2 : 1; });
  auto in_base = swap_fixed_check(o, tau, GWord::gen(A).pow(2));
  CHECK(in_base.outcome == SwapFixedOutcome::InBase);
  CHECK(in_base.base_witness == GWord::gen(A).pow(2));

  auto moved = swap_fixed_check(o, tau, GWord::gen(B));
  CHECK(moved.outcome == SwapFixedOutcome::NotFixed);

  auto moved2 = swap_fixed_check(o, tau, w({{B, 1}, {C, 1}}));
  CHECK(moved2.outcome == SwapFixedOutcome::NotFixed);
}

TEST_CASE("twisted decomposition: spec cases") {
  auto o = make_free_amalgam({{B}, {C}}, {});
  auto tau = make_letter_swap({{B, C}}, [](int j) { return j == 1 ? 2 : 1; });

  auto id_case = twisted_decompose(o, tau, GWord());
  REQUIRE(id_case.has_value());
  CHECK(id_case->first.empty());
  CHECK(id_case->second.empty());

  auto bc = twisted_decompose(o, tau, w({{B, 1}, {C, -1}}));
  REQUIRE(bc.has_value());
  CHECK(bc->first == GWord::gen(B));
  CHECK(bc->second.empty());

  auto bcbc = twisted_decompose(o, tau, w({{B, 1}, {C, -1}, {B, 1}, {C, -1}}));
  REQUIRE(bcbc.has_value());
  CHECK(bcbc->first == w({{B, 1}, {C, -1}}));
  CHECK(bcbc->second.empty());

  CHECK_THROWS_AS(twisted_decompose(o, tau, GWord::gen(B)), std::invalid_argument);
}

TEST_CASE("twisted decomposition with a nontrivial base, randomized") {
  std::mt19937 rng(3883);
  auto o = make_free_amalgam({{A, B}, {A, C}}, {A});
  auto tau = make_letter_swap({{B, C}}, [](int j) { return j == 1 ? 2 : 1; });
  std::uniform_int_distribution<int> len(0, 8);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::pair<int, int>> ls;
    for (int k = 0, L = len(rng); k < L; ++k)
      ls.push_back({1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
    const GWord seed(ls);
    const GWord alpha = seed.concat(tau.elem_map(seed.inverse()));
    auto dec = twisted_decompose(o, tau, alpha);
    REQUIRE(dec.has_value());
    // engine self-checks the rebuild; assert the beta' condition here
    CHECK(tau.elem_map(dec->second) == dec->second.inverse());
  }
}

TEST_CASE("normal form uniqueness under random re-chunking") {
  std::mt19937 rng(4994);
  auto o = make_free_amalgam({{A, B}, {A, C}}, {A});
  std::uniform_int_distribution<int> len(1, 10);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::pair<int, int>> ls;
    for (int k = 0, L = len(rng); k < L; ++k)
      ls.push_back({1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
    const GWord word(ls);
    auto nf = amalgam_nf_of(o, word);
    REQUIRE(nf.has_value());
    // element rebuilt from the normal form has the same normal form
    auto nf2 = amalgam_nf_of(o, amalgam_nf_element(o, *nf));
    REQUIRE(nf2.has_value());
    CHECK(amalgam_nf_equal(o, *nf, *nf2));
    // j(i) alternates by construction
    for (int k = 0; k + 1 < nf->length(); ++k)
      CHECK(nf->syllables[k].first != nf->syllables[k + 1].first);
  }
}
