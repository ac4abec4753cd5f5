#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace solmin {

/// One named residual with its tolerance and verdict.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string location;
  bool pass = false;
};

/// Accumulates named residual checks and serializes them one per line as
/// "name residual tolerance verdict [location]".  A NaN residual fails.
class VerificationReport {
 public:
  void add(std::string name, double residual, double tolerance,
           std::string location = {});
  void merge(const VerificationReport& other);

  /// Multiplies every tolerance by s and re-evaluates the verdicts; used to
  /// tighten a whole suite at once (negative controls) without touching the
  /// individual checks.
  void scale_tolerances(double s);

  /// Stable order for serialization: by name, then location.
  void sort_checks();

  bool all_pass() const;
  std::size_t failure_count() const;
  double max_residual() const;
  const std::vector<Check>& checks() const { return checks_; }

  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace solmin
