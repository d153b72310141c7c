// Merging and sorting records in place, keeping equal keys in input order.

#include <iostream>
#include <string>
#include <vector>

#include "shufflemerge/shufflemerge.hpp"

struct Employee {
  int dept;
  std::string name;
};

int main() {
  std::vector<Employee> staff{{3, "ada"}, {1, "bob"}, {2, "cy"}, {1, "dee"}, {3, "eve"}, {2, "fay"}};
  auto by_dept = [](const Employee& a, const Employee& b) { return a.dept < b.dept; };

  shufflemerge::sort(staff, by_dept);
  for (const auto& e : staff) std::cout << e.dept << ' ' << e.name << '\n';

  std::vector<int> runs{1, 4, 9, 16, 2, 3, 5, 7, 11, 13};
  shufflemerge::CostCounters counters;
  shufflemerge::merge(runs, 4, std::less<>{}, {&counters});
  for (int v : runs) std::cout << v << ' ';
  std::cout << "\ncomparisons=" << counters.comparisons << " moves=" << counters.element_moves << '\n';
}
