#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thetacorr {

struct CheckReport {
  std::string name;
  bool pass = false;
  long cases = 0;
  long failures = 0;
  std::string detail;  // first failure, or a coverage summary
};

// tables, param-compat, unramified, generic, dichotomy, closure, theta-laws,
// jacquet, ds
const std::vector<std::string>& oracle_names();
// Unknown names raise UnsupportedError. "all" is not accepted here.
CheckReport run_oracle(const std::string& name, std::uint32_t seed = 1729);
std::vector<CheckReport> run_all_oracles(std::uint32_t seed = 1729);

}  // namespace thetacorr
