#pragma once

// Wave evaluators: anything that can produce a Taylor jet of a function of a
// real coordinate. Eigenfunctions of a known potential produce jets of any
// order from (psi, psi') through the Schroedinger recurrence; plain sampled
// functions only carry what they were given.

#include <functional>
#include <optional>

#include "invosc/jet.hpp"
#include "invosc/types.hpp"

namespace invosc {

/// Potential as a jet-valued function: V(x0 + t) to the requested order.
using Potential = std::function<Jet(double x, int order)>;
using JetFn = std::function<Jet(double x, int order)>;

/// V(x) = omega^2 x^2 / 2.
Potential quadratic_potential(Complex omega);

/// Taylor jet of a solution of -psi''/2 + V psi = E psi from its value and
/// derivative at x; V must be supplied to order >= order - 2.
Jet sse_jet(const WaveEval& at, const Jet& V, Complex E, int order);

class Wave {
 public:
  static constexpr int kUnbounded = 1 << 20;

  Wave() = default;
  explicit Wave(JetFn fn, int max_order = kUnbounded, std::optional<Complex> energy = std::nullopt);

  /// Eigenfunction of V at energy E given as (value, derivative).
  static Wave eigen(std::function<WaveEval(double)> eval, Potential V, Complex E);
  /// Value and derivative only; the second derivative comes from a central
  /// difference of the derivative.
  static Wave sampled(std::function<WaveEval(double)> eval, double step = 1e-5);
  /// Value only.
  static Wave values(std::function<Complex(double)> f);

  /// Throws Error(MissingDerivative) when order exceeds max_order().
  Jet jet(double x, int order) const;
  WaveEval eval(double x) const;
  Complex value(double x) const;

  int max_order() const noexcept { return max_order_; }
  std::optional<Complex> energy() const noexcept { return energy_; }
  Wave with_energy(Complex E) const;
  explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

 private:
  JetFn fn_;
  int max_order_ = kUnbounded;
  std::optional<Complex> energy_;
};

/// Five-point second difference.
Complex fd_second(const std::function<Complex(double)>& f, double x, double h);
/// Five-point first difference.
Complex fd_first(const std::function<Complex(double)>& f, double x, double h);
/// Step used by the residual checks: 5e-3 / max(1, |x|).
double fd_step(double x) noexcept;

/// |-f''/2 + V f - E f| with f'' by finite differences, and the scale
/// |f''/2| + |E f| + 1 it is compared against.
struct Residual {
  double abs = 0.0;
  double scale = 1.0;
  double rel() const noexcept { return abs / scale; }
};
Residual sse_residual(const std::function<Complex(double)>& f, const std::function<Complex(double)>& V, Complex E,
                      double x);

}  // namespace invosc
