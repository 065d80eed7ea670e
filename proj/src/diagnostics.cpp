#include "invosc/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace invosc {

Check& DiagnosticReport::add(std::string name, double max_residual, double tol, std::string detail) {
  checks.push_back({std::move(name), max_residual, tol, max_residual <= tol, std::move(detail)});
  return checks.back();
}

Check& DiagnosticReport::add_flag(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? 0.0 : 1.0, 0.5, ok, std::move(detail)});
  return checks.back();
}

void DiagnosticReport::merge(const DiagnosticReport& other) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!other.suite.empty()) copy.name = other.suite + "." + c.name;
    checks.push_back(std::move(copy));
  }
}

bool DiagnosticReport::pass() const noexcept {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

double DiagnosticReport::max_residual() const noexcept {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.max_residual);
  return m;
}

std::string DiagnosticReport::to_json(int indent) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    // NaN is not representable in JSON
    e["max_residual"] = std::isfinite(c.max_residual) ? nlohmann::json(c.max_residual) : nlohmann::json(nullptr);
    e["tol"] = c.tol;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  j["pass"] = pass();
  return j.dump(indent);
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("linear_fit needs two or more (x, y) pairs");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
  return f;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) lx[i] = std::log(x[i]);
  for (std::size_t i = 0; i < y.size(); ++i) ly[i] = std::log(y[i]);
  return linear_fit(lx, ly).slope;
}

}  // namespace invosc
