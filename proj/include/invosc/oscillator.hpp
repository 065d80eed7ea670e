#pragma once

// Closed-form solutions of -psi''/2 + omega^2 x^2 psi / 2 = E psi for the
// harmonic (omega = 1), free (omega = 0) and inverted (omega = i) oscillators.

#include <optional>
#include <string_view>

#include "invosc/quadrature.hpp"
#include "invosc/specfun.hpp"
#include "invosc/wave.hpp"

namespace invosc {

enum class OscillatorKind { Harmonic, Free, Inverted };

Complex omega_of(OscillatorKind kind) noexcept;
std::string_view to_string(OscillatorKind kind) noexcept;
std::optional<OscillatorKind> parse_oscillator_kind(std::string_view s) noexcept;

enum class ComboTag { Even, Odd, General, Plus, Minus, Left, Right };
std::string_view to_string(ComboTag tag) noexcept;
std::optional<ComboTag> parse_combo(std::string_view s) noexcept;

struct Combo {
  ComboTag tag = ComboTag::Even;
  double C = 1.0;  // used by General
  double D = 0.0;

  static Combo even() { return {ComboTag::Even, 1.0, 0.0}; }
  static Combo odd() { return {ComboTag::Odd, 0.0, 1.0}; }
  static Combo general(double C, double D) { return {ComboTag::General, C, D}; }
  static Combo of(ComboTag t) { return t == ComboTag::Odd ? odd() : Combo{t, 1.0, 0.0}; }
};

struct SolutionSpec {
  OscillatorKind kind = OscillatorKind::Inverted;
  double energy = 0.0;
  Combo combo;

  /// Throws Error(UnsupportedKind) for Plus/Minus/Left/Right off the inverted
  /// oscillator, Error(InvalidArgument) for non-finite numbers.
  void validate() const;
  /// Real-valued solution (real C, D and E; Left/Right).
  bool is_real() const noexcept;
};

/// e^{-omega x^2/2}[C 1F1(1/4 - E/(2 omega), 1/2; omega x^2)
///                 + D x 1F1(3/4 - E/(2 omega), 3/2; omega x^2)]
/// Throws Error(UnsupportedKind) for the free particle.
WaveEval general_solution(const SolutionSpec& spec, double x);

/// Parity solutions for any omega != 0 and complex E, normalized by
/// (psi_e, psi_e') = (1, 0) and (psi_o, psi_o') = (0, 1) at the origin.
WaveEval parity_even(Complex omega, Complex E, double x);
WaveEval parity_odd(Complex omega, Complex E, double x);

/// Inverted-oscillator parity solutions.
WaveEval psi_even(Complex E, double x);
WaveEval psi_odd(Complex E, double x);

/// Leading large-x forms of psi_even / psi_odd. Throws Error(Domain) for
/// x < x_min.
Complex asymptotic_even(Complex E, double x, double x_min = 6.0);
Complex asymptotic_odd(Complex E, double x, double x_min = 6.0);

struct NormalizationNE {
  double E;
  Complex value;
};
NormalizationNE normalization_NE(double E);

/// Gamma-ratio coefficients of the inverted-oscillator combinations:
/// kappa_P(E) = 2 e^{-i pi/4} Gamma(3/4 - iE/2) / Gamma(1/4 - iE/2),
/// kappa_N(E) = 2 e^{+i pi/4} Gamma(3/4 + iE/2) / Gamma(1/4 + iE/2).
Complex kappa_P(Complex E);
Complex kappa_N(Complex E);
/// Real coefficient of psi_odd in the left-mover (kappa_P + kappa_N) / 2.
double left_coefficient(double E);

/// Plus, Minus, Left and Right (inverted oscillator only).
WaveEval psi_combo(const SolutionSpec& spec, double x);

/// Any solution described by spec, including Even/Odd/General for all kinds.
/// The free particle uses cos(kx) and sin(kx)/k with k = sqrt(2E).
WaveEval evaluate(const SolutionSpec& spec, double x);

/// The plane waves e^{+-ikx} of the free particle.
WaveEval free_plane_wave(int sign, double E, double x);

/// Eigen-tagged evaluator for spec (jets through the SSE recurrence).
Wave solution_wave(const SolutionSpec& spec);
Potential oscillator_potential(OscillatorKind kind);

/// int_{-L}^{L} conj(f) g dx.
Complex window_inner_product(const Integrand& f, const Integrand& g, double L, const QuadOptions& opt = {});

enum class Sigma { Plus, Minus };

/// (2 pi)^{-1/2} x_sigma^{i lambda - 1/2}; x_+ = x on x > 0 (0 otherwise),
/// x_- = -x on x < 0 (0 otherwise). Throws Error(Domain) at x = 0.
Complex mellin_basis(Sigma sigma, double lambda, double x);

/// 2^{iE/2} (2 pi)^{-1} int_{|p| <= P} p_sigma^{-iE-1/2} e^{i(p^2/4 + x p + x^2/2)} dp.
Complex integral_representation_check(Sigma sigma, double E, double x, double p_cutoff,
                                      const QuadOptions& opt = {});

}  // namespace invosc
