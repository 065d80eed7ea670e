#pragma once

#include <string>
#include <vector>

namespace invosc {

struct Check {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;
};

/// Named residual checks with pass/fail, serializable to JSON.
struct DiagnosticReport {
  std::string suite;
  std::vector<Check> checks;

  /// Records max_residual <= tol (NaN fails).
  Check& add(std::string name, double max_residual, double tol, std::string detail = {});
  /// Records a boolean outcome; residual is reported as 0 or 1.
  Check& add_flag(std::string name, bool ok, std::string detail = {});
  void merge(const DiagnosticReport& other);

  bool pass() const noexcept;
  double max_residual() const noexcept;
  std::string to_json(int indent = 2) const;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least squares y = slope x + intercept.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);
/// Slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace invosc
