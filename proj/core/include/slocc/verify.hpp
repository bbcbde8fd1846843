#pragma once

#include <string>
#include <vector>

#include "slocc/conjugacy.hpp"

namespace slocc {

enum class Outcome { pass, fail, partial };
std::string to_string(Outcome o);

struct CheckResult {
  std::string name;
  std::string anchor;
  int criterion = 0;  // acceptance criterion 1..10
  Outcome outcome = Outcome::fail;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  Outcome outcome() const;
};

/// algebra, weyl, invariants, catalog, nilpotent, jordan, roundtrip, stable.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const ConjugacyLimits& limits = {});

/// Worst outcome per criterion over the given reports (pass < partial < fail).
Outcome criterion_outcome(const std::vector<SuiteReport>& reports, int criterion);

}  // namespace slocc
