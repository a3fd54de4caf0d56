#pragma once

#include <string>
#include <vector>

namespace astlab {

struct RunCaps {
  int enumeration = 6;
  int partition = 5;
  int matchings = 4;
};

struct CheckResult {
  std::string check;
  int n = 0;
  unsigned seed = 0;
  int points = 0;
  std::string status;  // pass | fail | conjecture-pass | conjecture-fail
  int rejected = 0;
  std::string details;
  bool hard_fail() const { return status == "fail"; }
  bool ok(bool strict_conjectures) const {
    if (status == "pass" || status == "conjecture-pass") return true;
    if (status == "conjecture-fail") return !strict_conjectures;
    return false;
  }
};

// The check ids run by `verify --check all`, in a fixed order.
const std::vector<std::string>& check_ids();

// Runs one check. max_n <= 0 selects the check's default range; seed and
// points feed the random-point verifiers.
CheckResult run_check(const std::string& id, int max_n, unsigned seed, int points,
                      const RunCaps& caps = {});

}  // namespace astlab
