#include "lwood/acceptance.hpp"

#include <iostream>

int main() {
  std::vector<int> ids;
  for (const auto& c : lwood::acceptance_criteria()) ids.push_back(c.id);
  int failed = 0;
  for (const auto& r : lwood::run_criteria(ids)) {
    std::cout << lwood::format_result(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << ids.size() - failed << " of " << ids.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
