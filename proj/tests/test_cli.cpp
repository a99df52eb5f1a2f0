// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and the JSON on stdout.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(VBW_BINARY) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

nlohmann::json strip_timing(nlohmann::json j) {
  j.erase("time_ms");
  if (j.contains("report")) j["report"].erase("seconds");
  return j;
}

}  // namespace

TEST_CASE("normalize") {
  const RunResult r = run("normalize --n 4 \"t1 s1\"");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kb"] == "d2.1");
  CHECK(j["perm"] == nlohmann::json::array({2, 1, 3, 4}));
}

TEST_CASE("eval piP") {
  const RunResult r = run("eval --hom piP --n 4 \"t1 s2 t1\"");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["output"]["perm"] == nlohmann::json::array({3, 2, 1, 4}));
}

TEST_CASE("eval iota on a symmetric word") {
  const RunResult a = run("eval --hom iota --n 4 \"s1 s2 s1\"");
  const RunResult b = run("eval --hom iota --n 4 \"s2 s1 s2\"");
  CHECK(a.exit_code == 0);
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(ja["output"] == jb["output"]);
  CHECK(ja["output"]["perm"] == nlohmann::json::array({3, 2, 1, 4}));
}

TEST_CASE("kb-eq verdicts and exit codes") {
  const RunResult eq = run("kb-eq --n 4 \"d1.2 d3.4\" \"d3.4 d1.2\"");
  CHECK(eq.exit_code == 0);
  CHECK(nlohmann::json::parse(eq.out)["verdict"]["outcome"] == "equal");

  const RunResult di = run("kb-eq --n 4 \"d1.2\" \"d2.1\"");
  CHECK(di.exit_code == 0);
  CHECK(nlohmann::json::parse(di.out)["verdict"]["outcome"] == "distinct");

  // tier-5-only word under a starved budget: unknown, exit 3
  const RunResult un =
      run("kb-eq --n 3 --budget 0 \"d3.1 d1.2 d2.3 d1.2 d2.3' d1.2' d2.3' d3.1'\" \"e\"");
  CHECK(un.exit_code == 3);
  CHECK(nlohmann::json::parse(un.out)["verdict"]["outcome"] == "unknown");
}

TEST_CASE("classify reports the catalog") {
  const RunResult r = run("classify --from vb5 --to sym5");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out)["report"];
  CHECK(j["certified"] == true);
  CHECK(j["catalog_match"] == true);
  int pik = 0, pip = 0;
  for (const auto& c : j["classes"]) {
    if (c["tag"] == "piK") ++pik;
    if (c["tag"] == "piP") ++pip;
  }
  CHECK(pik == 1);
  CHECK(pip == 1);
}

TEST_CASE("verify suite runs and passes") {
  const RunResult r = run("verify --suite lemma6_0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out)["report"];
  CHECK(j["failed"] == 0);
  CHECK(j["unknown"] == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("normalize --n 4 \"q9\"").exit_code == 2);
  CHECK(run("classify --from vb5 --to vb5").exit_code == 2);
  CHECK(run("eval --hom bogus --n 4 \"s1\"").exit_code == 2);
}

TEST_CASE("identical invocations produce identical JSON modulo timing") {
  const RunResult a = run("classify --from sym5 --to sym3");
  const RunResult b = run("classify --from sym5 --to sym3");
  CHECK(strip_timing(nlohmann::json::parse(a.out)) == strip_timing(nlohmann::json::parse(b.out)));
}
