#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "grpwl/acceptance.hpp"

// Runs the named criteria (all of them by default) and prints one line each.
int main(int argc, char** argv) {
  std::vector<std::string> tags(argv + 1, argv + argc);
  if (tags.empty()) tags = grpwl::acceptance_tags();
  grpwl::AcceptanceOptions options;
  options.log = &std::cerr;
  int failed = 0;
  for (const auto& tag : tags) {
    grpwl::CriterionResult r = grpwl::run_acceptance(tag, options);
    std::printf("criterion %zu [%s] %s: %s (%.1fs)\n", r.number, r.tag.c_str(),
                r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& [k, v] : r.facts) std::printf("    %s = %s\n", k.c_str(), v.c_str());
    for (const auto& f : r.failures) std::printf("    failure: %s\n", f.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed ? 1 : 0;
}
