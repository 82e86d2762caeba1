#pragma once

#include <string>
#include <vector>

#include "context.hpp"
#include "webgraph.hpp"

namespace weblab::verify {

struct CheckResult {
  int number = 0;
  std::string name;
  bool passed = false;
  bool required = true;
  double seconds = 0;
  std::vector<std::string> notes;   // failures and key stats
};

struct Options {
  int max_n = 0;        // 0: full required depth
  bool stretch = false; // adds the size-7 scan
  int threads = 0;      // 0: hardware
  std::string suite = "all";  // or a single check name
};

std::vector<CheckResult> run_acceptance(const Options& opt);
bool all_passed(const std::vector<CheckResult>& results);
std::string results_json(const std::vector<CheckResult>& results);

// Fixed unreduced webs used by the engine checks and tests.
webgraph::PlaneWeb tripod_with_doubled_edge();    // reduces to -2 x tripod
webgraph::PlaneWeb nine_point_unreduced_web();    // unbalanced middle symbols

}  // namespace weblab::verify
