#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace codim2 {

struct CriterionResult
{
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the end-to-end acceptance criteria, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream &out);

} // namespace codim2
