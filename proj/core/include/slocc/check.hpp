#pragma once

#include <string>
#include <vector>

namespace slocc {

/// Outcome of a self-verification: how many identities were checked and
/// which ones failed.
struct CheckReport {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const CheckReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace slocc
