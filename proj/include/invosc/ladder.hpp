#pragma once

// Factorization operators a_omega^{+-} = (-+d/dx + omega x)/sqrt(2) and the
// four Hermite ladders of the harmonic and inverted oscillators.

#include <optional>
#include <string_view>

#include "invosc/diagnostics.hpp"
#include "invosc/oscillator.hpp"
#include "invosc/wave.hpp"

namespace invosc {

enum class LadderFamily { BoundHarmonic, NonphysHarmonic, InvertedMinus, InvertedPlus };
std::string_view to_string(LadderFamily f) noexcept;

struct LadderState {
  LadderFamily family;
  int n;
  Complex eigenvalue;
};

/// n + 1/2, -n - 1/2, i(n + 1/2), -i(n + 1/2). Throws for n < 0.
LadderState make_ladder_state(LadderFamily family, int n);
OscillatorKind kind_of(LadderFamily family) noexcept;

/// Closed Hermite form of the n-th member of the family.
WaveEval ladder_state(LadderFamily family, int n, double x);
Wave ladder_wave(LadderFamily family, int n);

/// Jet-level operators. Each consumes the stated number of orders.
Jet apply_a(Complex omega, int sign, const Jet& f, double x);   // 1
Jet apply_H(const Jet& f, const Jet& V);                        // 2

/// a_omega^{sign} psi. The result is tagged with energy E + sign*omega when
/// psi carries E. Throws Error(MissingDerivative) if psi has no derivative.
Wave ladder_apply(Complex omega, int sign, const Wave& psi);

/// H psi for the oscillator with frequency omega.
Wave hamiltonian_apply(Complex omega, const Wave& psi);

/// p(x) e^{-x^2/4} with p given by its monomial coefficients.
Wave damped_polynomial(std::vector<double> coeffs);

/// Sup-norm residuals of [H, a^{+-}] = +-omega a^{+-}, [a^-, a^+] = omega and
/// both factorizations of H on random Gaussian-damped polynomials over
/// [-5, 5].
DiagnosticReport algebra_residuals(Complex omega, int trials, unsigned seed = 12345, double tol = 1e-8);

}  // namespace invosc
