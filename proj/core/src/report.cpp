#include "solmin/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace solmin {

void VerificationReport::add(std::string name, double residual,
                             double tolerance, std::string location) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.location = std::move(location);
  c.pass = std::isfinite(residual) && residual <= tolerance;
  checks_.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void VerificationReport::scale_tolerances(double s) {
  for (Check& c : checks_) {
    c.tolerance *= s;
    c.pass = std::isfinite(c.residual) && c.residual <= c.tolerance;
  }
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const Check& a, const Check& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.location < b.location;
                   });
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.pass; });
}

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(),
                    [](const Check& c) { return !c.pass; }));
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const Check& c : checks_) m = std::max(m, std::fabs(c.residual));
  return m;
}

std::string VerificationReport::to_text() const {
  std::string out;
  char line[512];
  for (const Check& c : checks_) {
    int n = std::snprintf(line, sizeof line, "%s %.17g %.17g %s%s%s\n",
                          c.name.c_str(), c.residual, c.tolerance,
                          c.pass ? "PASS" : "FAIL",
                          c.location.empty() ? "" : " ", c.location.c_str());
    if (n > 0) out.append(line, static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace solmin
