// Runs every acceptance criterion, printing one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include <skeinlab/suite.hpp>

#include <iostream>

int main() {
  int failed = 0;
  for (const auto& c : skeinlab::suite::criteria()) {
    auto r = skeinlab::suite::run(c);
    std::cout << skeinlab::suite::format(r) << std::endl;
    if (!r.pass()) ++failed;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed;
}
