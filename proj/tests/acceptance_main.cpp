// Acceptance gate: runs every criterion at its fixed tolerance and prints
// one pass/fail line per check. Exit code 0 only if everything passes.
#include <cstdio>
#include <iostream>
#include <string>

#include "birkhoff/verify.hpp"

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "acceptance_out";
  try {
    const auto checks = birkhoff::acceptance_criteria(out_dir);
    birkhoff::print_check_table(std::cout, checks);
    int failed = 0;
    for (const auto& c : checks) failed += c.pass ? 0 : 1;
    if (failed == 0) {
      std::cout << "ACCEPTANCE: all " << checks.size() << " checks passed\n";
      return 0;
    }
    std::cout << "ACCEPTANCE: " << failed << " of " << checks.size()
              << " checks failed\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << "\n";
    return 1;
  }
}
