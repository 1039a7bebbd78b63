#pragma once

#include <string>
#include <vector>

namespace qcat {

/// Outcome of one verification: which identity, over which labels, and the
/// label tuples (as text) where it failed.
struct CheckReport {
  std::string check;
  std::vector<int> params;
  bool pass = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
  /// Folds another report's failures into this one.
  void absorb(const CheckReport& other) {
    if (!other.pass) pass = false;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace qcat
