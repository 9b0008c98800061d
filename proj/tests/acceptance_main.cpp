#include <algorithm>
#include <iostream>

#include "codim2/acceptance.hpp"

int main()
{
  auto const results = codim2::run_acceptance(std::cout);
  auto const passed = std::count_if(results.begin(), results.end(), [](auto const &r) { return r.pass; });
  std::cout << passed << "/" << results.size() << " acceptance criteria passed\n";
  return passed == static_cast<long>(results.size()) ? 0 : 1;
}
