// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Time limits are part of the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "vbw/homsearch.hpp"
#include "vbw/kbeq.hpp"
#include "vbw/suites.hpp"
#include "vbw/vb.hpp"

using namespace vbw;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion1_sym5() {
  for (int m = 2; m <= 5; ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    ClassifyReport rep = classify_sym_to_sym(5, m);
    const double secs = seconds_since(t0);
    const bool pass = rep.certified && rep.catalog_match && secs < 60.0;
    report(1, "classify sym5 -> sym" + std::to_string(m) + " matches the catalog", pass,
           fmt_seconds(secs) + ", " + std::to_string(rep.classes.size()) + " classes");
  }
}

void criterion2_sym6() {
  const auto t0 = std::chrono::steady_clock::now();
  ClassifyReport rep = classify_sym_to_sym(6, 6);
  const double secs = seconds_since(t0);
  const bool pass = rep.certified && rep.catalog_match && rep.count_tag("identity") == 1 &&
                    rep.count_tag("nu6") == 1 && secs < 1800.0;
  report(2, "classify sym6 -> sym6 matches {abelian, id, nu6}", pass, fmt_seconds(secs));
}

void criterion3_vb() {
  for (int m = 2; m <= 5; ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    ClassifyReport rep = classify_vb_to_sym(5, m);
    const double secs = seconds_since(t0);
    bool pass = rep.certified && rep.catalog_match && secs < 600.0;
    if (m == 5) pass = pass && rep.count_tag("piK") == 1 && rep.count_tag("piP") == 1;
    report(3, "classify vb5 -> sym" + std::to_string(m) + " matches the catalog", pass,
           fmt_seconds(secs));
  }
  const auto t0 = std::chrono::steady_clock::now();
  ClassifyReport rep = classify_vb_to_sym(6, 6);
  const double secs = seconds_since(t0);
  const bool pass = rep.certified && rep.catalog_match && rep.count_tag("piK") == 1 &&
                    rep.count_tag("piP") == 1 && rep.count_tag("nu6.piK") == 1 &&
                    rep.count_tag("nu6.piP") == 1;
  report(3, "classify vb6 -> sym6 (stretch) matches the catalog", pass, fmt_seconds(secs));
}

void criterion4_relations() {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite("relations");
  const double secs = seconds_since(t0);
  const bool pass = rep.failed == 0 && rep.unknown == 0 && secs < 10.0;
  report(4, "all defining relators of VB_3..VB_7 fold to certified identities", pass,
         fmt_seconds(secs) + ", " + std::to_string(rep.passed) + " relators, " +
             std::to_string(rep.unknown) + " unknown");
}

void criterion5_catalog() {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite("catalog");
  SuiteReport nu6 = run_suite("nu6");
  const double secs = seconds_since(t0);
  const bool pass = rep.failed == 0 && rep.unknown == 0 && nu6.failed == 0 && secs < 1.0;
  report(5, "catalog identities (zeta, sections, nu6, abelianization)", pass,
         fmt_seconds(secs) + ", " + std::to_string(rep.passed + nu6.passed) + " checks");
}

void criterion6_normalform() {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite("normalform");
  const double secs = seconds_since(t0);
  const bool pass = rep.failed == 0 && rep.unknown == 0 && secs < 30.0;
  report(6, "amalgam normal-form uniqueness and base-membership checks", pass,
         fmt_seconds(secs) + ", " + std::to_string(rep.passed) + " cases");
}

void criterion7_lemmas() {
  for (const std::string suite : {"lemma3_8", "lemma3_9", "lemma3_11"}) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep = run_suite(suite, 20000);
    const double secs = seconds_since(t0);
    const double total = static_cast<double>(rep.cases.size());
    const double unknown_rate = static_cast<double>(rep.unknown) / total;
    const bool pass = rep.failed == 0 && unknown_rate < 0.10;
    char detail[128];
    std::snprintf(detail, sizeof detail, "%s, %d ok, %d wrong, unknown rate %.1f%%",
                  fmt_seconds(secs).c_str(), rep.passed, rep.failed, 100.0 * unknown_rate);
    report(7, suite + " round-trips on " + std::to_string(rep.cases.size()) + " seeded cases",
           pass, detail);
  }
}

void criterion8_lemma6_0() {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite("lemma6_0");
  const double secs = seconds_since(t0);
  const bool pass = rep.failed == 0 && rep.unknown == 0 && secs < 5.0;
  report(8, "delta power pairs in KB_4 vanish only at the origin (dihedral tier)", pass,
         fmt_seconds(secs) + ", " + std::to_string(rep.passed) + " index pairs");
}

void criterion9_fuzz() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(900913);
  const auto full4 = GeneratorSubset::full(4).members();
  const auto full5 = GeneratorSubset::full(5).members();
  auto random_word = [&](int n, int len) {
    const auto& gens = n == 4 ? full4 : full5;
    std::vector<KBLetter> ls;
    for (int k = 0; k < len; ++k)
      ls.push_back({gens[rng() % gens.size()], rng() % 2 ? 1 : -1});
    return KBWord(n, ls);
  };
  auto random_relator = [&](int n) {
    const auto& gens = n == 4 ? full4 : full5;
    while (true) {
      const DeltaGen a = gens[rng() % gens.size()], b = gens[rng() % gens.size()];
      const int m = kb_coxeter_entry(a, b);
      if (m == 2) return KBWord(n, {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
      if (m == 3) return KBWord(n, {{a, 1}, {b, 1}, {a, 1}, {b, -1}, {a, -1}, {b, -1}});
    }
  };

  int bad_distinct = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = t % 2 ? 4 : 5;
    const KBWord w = random_word(n, 5);
    const KBWord conj = random_word(n, 2);
    const KBWord v = w.concat(conj).concat(random_relator(n)).concat(conj.inverse());
    if (kb_equal(w, v).distinct()) ++bad_distinct;
  }
  int bad_equal = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = t % 2 ? 4 : 5;
    const KBWord u = random_word(n, 5);
    const auto& gens = n == 4 ? full4 : full5;
    const KBWord v = u.concat(KBWord::single(n, gens[rng() % gens.size()]));
    if (kb_abelianize(u) == kb_abelianize(v)) continue;  // not separated; skip
    if (kb_equal(u, v).equal()) ++bad_equal;
  }
  const double secs = seconds_since(t0);
  const bool pass = bad_distinct == 0 && bad_equal == 0 && secs < 60.0;
  report(9, "soundness fuzz (1000 relator perturbations, 1000 separated pairs)", pass,
         fmt_seconds(secs) + ", " + std::to_string(bad_distinct) + " false distinct, " +
             std::to_string(bad_equal) + " false equal");
}

}  // namespace

int main() {
  criterion1_sym5();
  criterion2_sym6();
  criterion3_vb();
  criterion4_relations();
  criterion5_catalog();
  criterion6_normalform();
  criterion7_lemmas();
  criterion8_lemma6_0();
  criterion9_fuzz();
  std::printf("%s: %d failure(s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
