#pragma once

#include <string>
#include <vector>

#include "vbw/kbeq.hpp"

namespace vbw {

struct SuiteCase {
  std::string name;
  bool pass = false;
  bool unknown = false;  // an oracle gave up within budget; counted separately
  std::string info;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  int passed = 0;
  int failed = 0;
  int unknown = 0;
  double seconds = 0.0;

  bool all_pass() const { return failed == 0; }
  void add(SuiteCase c);
  std::string to_json() const;
};

// Suites: relations, catalog, nu6, lemma3_8, lemma3_9, lemma3_11, lemma6_0,
// normalform.  Each is runnable independently and reports per-case outcomes.
SuiteReport run_suite(const std::string& name, long budget = kDefaultBudget);
std::vector<std::string> suite_names();

}  // namespace vbw
