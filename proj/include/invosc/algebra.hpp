#pragma once

// Intertwiner B+ of the complex second-order transformation, eigenfunctions
// of the partner H2 and its natural ladder operators L^{+-} = B+ a^{+-} B-.

#include <string_view>
#include <vector>

#include "invosc/diagnostics.hpp"
#include "invosc/oscillator.hpp"
#include "invosc/susy.hpp"
#include "invosc/wave.hpp"

namespace invosc {

enum class Normalization { Raw, BFactor };
std::string_view to_string(Normalization n) noexcept;

struct PartnerEigenfunction {
  Complex eps;
  double E = 0.0;
  ComboTag base_combo = ComboTag::Left;
  Normalization normalization = Normalization::BFactor;

  /// Throws Error(Classification) for excluded eps, InvalidArgument for a
  /// combo other than Plus/Minus/Left/Right or non-finite E.
  void validate() const;
};

/// Jet-level operators, each consuming two orders.
/// B+ f = (f'' - g f' + h f)/2,  B- f = (f'' + g f' + (h + g') f)/2.
Jet apply_Bplus(const ComplexTransform& T, const Jet& f, double x);
Jet apply_Bminus(const ComplexTransform& T, const Jet& f, double x);
/// H2 f = -f''/2 + V2 f.
Jet apply_H2(const ComplexTransform& T, const Jet& f, double x);

/// Value of B+ f at x. f needs a second derivative (SSE tag or sampled).
Complex apply_Bplus(Complex eps, const Wave& f, double x);

Wave bplus_wave(const ComplexTransform& T, const Wave& f);
Wave bminus_wave(const ComplexTransform& T, const Wave& f);

/// L^{sign} f = B+ a_i^{sign} B- f. f must carry its energy E; the result
/// carries E + sign*i.
Wave apply_L(const ComplexTransform& T, int sign, const Wave& f);

/// Jets of V2 = V0 - g'.
Potential partner_potential(const ComplexTransform& T);

/// psi_E of H0 for the chosen combination (as an SSE-tagged wave).
Wave base_eigenfunction(const PartnerEigenfunction& p);

/// Raw: (w'/w)[-psi' + (u'/u) psi] + 2(eps - E) psi  (= 2 B+ psi).
/// BFactor: B+ psi / |E - eps|.
/// Throws Error(WZero) / Error(SeedZero).
WaveEval transformed_eigenfunction(const PartnerEigenfunction& p, double x);
/// Same function with jets of every order (tagged with E).
Wave transformed_wave(const PartnerEigenfunction& p);
/// The quoted closed form, evaluated directly from u, u', w and psi.
Complex closed_form_psi2(const PartnerEigenfunction& p, double x);

/// Ratio between the closed form and B+ psi.
inline constexpr double kClosedFormFactor = 2.0;

/// (E - eps)(E - conj eps)(E - eps - i)(E - conj eps - i)(E - i/2).
Complex P5_eval(Complex E, Complex eps);
/// P5(E + i) - P5(E).
Complex Q4_eval(Complex E, Complex eps);

/// Grid and tolerances for the partner-pair identities.
struct AlgebraOptions {
  Complex eps{1e-5, 5.0};
  double xmin = -6.0;
  double xmax = 6.0;
  int samples = 41;
  double tol_first = 1e-8;      // compositions of first-order operators
  double tol_intertwine = 1e-6;  // H2 B+ = B+ H0, B+ psi = |E - eps| psi2
  double tol_ladder = 1e-5;     // [H2, L] and B- B+
  double tol_stack = 1e-4;      // fifth-order stacks (relative)
  double tol_quad = 1e-7;       // inner products
  unsigned seed = 12345;
};

DiagnosticReport algebra_identities(const AlgebraOptions& opt = {});

/// Integrates the H2 equation outward from x = 0 with initial data (1, 0)
/// and (0, 1). For each energy returns the min over both shots and both
/// ends of int_{L/2}^{L} psi^2 / int_{L/4}^{L/2} psi^2. A normalizable state
/// drives this towards 0; the x^{-1} envelope keeps it near 1.
std::vector<double> shooting_tail_ratios(const ComplexTransform& T, const std::vector<double>& energies,
                                         double L = 40.0, double step = 5e-3);

}  // namespace invosc
