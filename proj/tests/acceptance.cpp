#include <cstdlib>
#include <iostream>
#include <string>

#include "foldhecke/verify.hpp"

// One line per acceptance criterion; exit status is nonzero when any fails.
int main(int argc, char** argv) {
  uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
  int failed = 0;
  for (int id = 1; id <= static_cast<int>(fh::suite_names().size()); ++id) {
    auto r = fh::run_suite(id, seed);
    std::cout << r.line() << std::endl;
    if (!r.passed) {
      ++failed;
      for (const auto& m : r.messages) std::cout << "    " << m << "\n";
    }
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
