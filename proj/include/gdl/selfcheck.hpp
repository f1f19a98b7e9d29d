#pragma once

// The acceptance suite: every exit criterion as an executable check with a
// one-line pass/fail verdict. Exact checks carry zero tolerance; a failing
// sub-check reports the measured value next to the stated one.

#include <string>
#include <vector>

namespace gdl {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// quick runs the (6,3,2)-scale checks; full adds (6,3,3) and (8,4,2)
std::vector<CheckResult> run_acceptance(bool full);

}  // namespace gdl
