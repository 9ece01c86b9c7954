#include <cstdlib>
#include <iostream>
#include <string>

#include "chainorder/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = chainorder::kDefaultSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  int failed = 0;
  for (const auto& r : chainorder::run_acceptance(seed)) {
    std::cout << chainorder::format_result(r) << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (11 - failed) << "/11 criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
