#include <chrono>
#include <cstdio>
#include <iostream>

#include "slocc/verify.hpp"

using namespace slocc;

int main() {
  const char* titles[] = {"",
                          "algebra construction",
                          "Weyl census",
                          "invariant identities",
                          "nilpotent suite",
                          "census",
                          "stabiliser self-check",
                          "centraliser dimensions",
                          "round-trip classification",
                          "Jordan correctness",
                          "S-table replay"};
  std::vector<SuiteReport> reports;
  for (const auto& name : suite_names()) {
    ConjugacyLimits limits;
    if (name == "stable") limits.groebner.time_budget = std::chrono::duration<double>(120);
    reports.push_back(run_suite(name, limits));
  }
  bool failed = false;
  for (int c = 1; c <= 10; ++c) {
    Outcome o = criterion_outcome(reports, c);
    double seconds = 0;
    for (const auto& r : reports)
      for (const auto& check : r.checks)
        if (check.criterion == c) {
          seconds += check.seconds;
          if (check.outcome != Outcome::pass)
            std::cerr << "criterion " << c << ": [" << to_string(check.outcome) << "] " << check.name << ": "
                      << check.detail << "\n";
        }
    if (o == Outcome::fail || (o == Outcome::partial && c != 10)) failed = true;
    std::string tag = o == Outcome::pass ? "PASS" : o == Outcome::partial ? "PARTIAL" : "FAIL";
    std::printf("criterion %2d %-7s %s (%.2f s)\n", c, tag.c_str(), titles[c], seconds);
  }
  return failed ? 1 : 0;
}
