#pragma once

#include <string>
#include <vector>

#include "swrad/model.hpp"

namespace swrad {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Compares every closed form / direct solve against its iterative oracle on
/// the given building (unit inputs per zone), plus the sealed-building
/// conservation and monotonicity properties. `tol` is the oracle
/// convergence tolerance.
std::vector<CheckResult> run_oracle_checks(const ValidatedModel& model, double tol = 1e-12);

}  // namespace swrad
