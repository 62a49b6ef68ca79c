#include <iostream>
#include <string>

#include "clttf/acceptance.hpp"

int main(int argc, char** argv) {
  std::string filter = argc > 1 ? argv[1] : "";
  int failures = clttf::acceptance::run(std::cout, filter);
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criterion(s) failed" : std::string("acceptance: all criteria passed")) << "\n";
  return failures ? 1 : 0;
}
