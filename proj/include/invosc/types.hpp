#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace invosc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Value and first derivative (d/dx) of a wavefunction at a real point.
struct WaveEval {
  Complex value;
  Complex deriv;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool is_finite(const WaveEval& w) noexcept {
  return is_finite(w.value) && is_finite(w.deriv);
}

}  // namespace invosc
