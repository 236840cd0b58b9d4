#include <cstdio>
#include <cstdlib>
#include <string>

#include "lightcone/acceptance.hpp"

// Usage: acceptance [criterion numbers...]
int main(int argc, char** argv) {
  lightcone::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  int failed = 0;
  lightcone::run_acceptance(options, [&](const lightcone::CriterionResult& r) {
    std::printf("%s\n", lightcone::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%s\n", failed == 0 ? "acceptance: all criteria PASS"
                                  : ("acceptance: " + std::to_string(failed) + " FAIL").c_str());
  return failed == 0 ? 0 : 1;
}
