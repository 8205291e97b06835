// Named numerical checks: a domain-parameterized battery for the CLI and
// the fixed acceptance criteria gate.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "birkhoff/domain.hpp"

namespace birkhoff {

struct CheckResult {
  std::string name;
  double value = 0.0;  // measured quantity (residual, deviation, ...)
  double bound = 0.0;  // the value must stay below this bound
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  std::vector<int> q_ladder{32, 64, 128};
  bool with_orbits = true;
  double disc_tol = 1e-10;
};

// Checks that apply to one domain: geometry invariants, Lazutkin identities,
// billiard map oracles, normal-form identities and the orbit distribution
// cross-validation (for non-discs).
std::vector<CheckResult> domain_check_battery(const DomainSpec& spec,
                                              const VerifyOptions& options = {});

// Domain-independent pendulum checks.
std::vector<CheckResult> pendulum_check_battery();

// The fixed acceptance gate; figure files are written into output_dir.
std::vector<CheckResult> acceptance_criteria(const std::string& output_dir);

bool all_passed(const std::vector<CheckResult>& checks);
void print_check_table(std::ostream& out,
                       const std::vector<CheckResult>& checks);

}  // namespace birkhoff
