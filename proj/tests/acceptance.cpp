// One PASS/FAIL line per acceptance criterion; failing checks are listed beneath their line.
#include <cstdio>
#include <iostream>

#include "cuspg2/suite.hpp"

int main() {
  using namespace cuspg2;
  bool all = true;
  for (const auto& c : suite::run_acceptance()) {
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
    for (const auto& r : c.checks)
      if (r.status == report::Status::kFail) std::cout << "    " << report::to_text(r) << '\n';
    all = all && c.passed();
  }
  return all ? 0 : 1;
}
