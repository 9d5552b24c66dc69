#include <iostream>

#include "bqm/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : bqm::acceptance_criteria()) {
    const auto r = bqm::run_criterion(c.id);
    std::cout << bqm::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
