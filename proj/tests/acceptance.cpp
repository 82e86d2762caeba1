#include <cstdio>
#include <cstring>
#include <string>

#include "core/verify.hpp"

int main(int argc, char** argv) {
  weblab::verify::Options opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--stretch") opt.stretch = true;
    else if (a == "--max-n" && i + 1 < argc) opt.max_n = std::atoi(argv[++i]);
    else if (a == "--suite" && i + 1 < argc) opt.suite = argv[++i];
    else if (a == "--threads" && i + 1 < argc) opt.threads = std::atoi(argv[++i]);
  }
  auto results = weblab::verify::run_acceptance(opt);
  for (const auto& r : results) {
    std::printf("[%2d/11] %-24s %s  (%.2f s)\n", r.number, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds);
    if (!r.passed)
      for (const auto& note : r.notes) std::printf("        %s\n", note.c_str());
  }
  return weblab::verify::all_passed(results) ? 0 : 1;
}
