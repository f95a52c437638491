#pragma once

#include <string>
#include <vector>

namespace msokit {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
  double total_seconds = 0.0;
  std::string str() const;   // one pass/fail line per criterion
  std::string json() const;
};

// Runs the whole desk-scale property suite. Deterministic for a fixed seed.
SelftestReport run_selftest(unsigned seed = 0);

}  // namespace msokit
