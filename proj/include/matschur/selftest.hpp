#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matschur::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, empty on pass
  double seconds = 0.0;
};

// Runs the twelve acceptance criteria; exact arithmetic throughout.
std::vector<CriterionResult> run_acceptance();

// One line per criterion; returns true when every criterion passes.
bool print_acceptance(std::ostream& os);

}  // namespace matschur::selftest
