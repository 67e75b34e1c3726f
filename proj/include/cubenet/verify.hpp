#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace cubenet {

/// One identity check: residual measured against an explicit tolerance.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Flat list of identity checks; failures are entries, not exceptions.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, double tolerance) {
    checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
  }

  void merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }

  double max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
  }

  std::vector<CheckResult> failures() const {
    std::vector<CheckResult> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c);
    return out;
  }
};

}  // namespace cubenet
