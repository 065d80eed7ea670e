#pragma once

// Verification suites (one per module) and the reproduction studies shared
// with the acceptance driver.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "invosc/diagnostics.hpp"
#include "invosc/oscillator.hpp"

namespace invosc {

enum class Suite { Specfun, Oscillator, Ladder, Susy, Algebra, All };
std::string_view to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view s) noexcept;

struct VerifyOptions {
  /// Replaces every check's tolerance when set.
  std::optional<double> tol;
};

DiagnosticReport verify(Suite suite, const VerifyOptions& opt = {});

DiagnosticReport verify_specfun();
DiagnosticReport verify_oscillator();
DiagnosticReport verify_ladder();
DiagnosticReport verify_susy();
DiagnosticReport verify_algebra();

/// Re-evaluates pass/fail of every check against tol.
void apply_tolerance(DiagnosticReport& rep, double tol);

// ---------------------------------------------------------------- studies

/// max |psi_L| on [-L, 0] over max |psi_L| on [0, L] (uniform grid).
double left_right_ratio(double E, int samples = 6001, double L = 6.0);
/// First-run value of left_right_ratio(-2).
inline constexpr double kLeftRightRatio = 47.5090092693303;

/// |psi|^2 + |psi'|^2 / k^2 with k^2 = x^2 + 2E: the squared amplitude of
/// an oscillating solution of the inverted oscillator, free of its zeros.
double envelope(const WaveEval& at, double x, double E);
/// Log-log slope of envelope(f(x), x, E) on n log-spaced points in [a, b].
double envelope_slope(const std::function<WaveEval(double)>& f, double E, double a, double b, int n = 200);
/// Log-log slope of |u_P(x, eps)|^2 on [a, b].
double seed_slope(Complex eps, double a, double b, int n = 200);

/// Finite-window surrogate of the Dirac normalization of psi_E^{+-}.
struct DiracWindow {
  std::vector<double> L;
  std::vector<double> diagonal;      // int |psi_E^+|^2
  std::vector<double> off_diagonal;  // |(psi_E^+, psi_{E+1}^+)|
  std::vector<double> cross;         // |(psi_E^+, psi_E^-)|
  LinearFit diagonal_vs_logL;
};
DiracWindow dirac_window_study(double E, const std::vector<double>& Ls = {20.0, 40.0, 80.0});

}  // namespace invosc
