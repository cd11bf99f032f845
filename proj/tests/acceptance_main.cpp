// Runs every acceptance criterion and prints one line per criterion.

#include <cstring>
#include <iostream>

#include "ribbonforge/acceptance.hpp"

int main(int argc, char** argv) {
  ribbonforge::acceptance::Options options;
  options.data_dir = RIBBONFORGE_DATA_DIR;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--data") == 0 && i + 1 < argc) {
      options.data_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--data DIR]\n";
      return 2;
    }
  }
  std::size_t failed = 0;
  ribbonforge::acceptance::run(options, [&](const ribbonforge::acceptance::CriterionResult& r) {
    std::cout << ribbonforge::acceptance::format_line(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
