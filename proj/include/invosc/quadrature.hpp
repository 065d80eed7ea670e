#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for oscillatory integrands.
//
// The interval is first cut into panels no wider than pi / (4 max(1, k(x)))
// where k is the local wavenumber, then every panel is bisected adaptively.
// Panels are independent; the parallel driver evaluates them concurrently and
// reduces in panel order, so both drivers return bit-identical sums.

#include <functional>

#include "invosc/types.hpp"

namespace invosc {

struct QuadOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  /// Upper bound on the number of panel bisections across the whole integral.
  long max_subdivisions = 400000;
  /// Local wavenumber; defaults to |x| (phase ~ x^2/2).
  std::function<double(double)> wavenumber;
  /// Use the OpenMP driver when available.
  bool parallel = true;
};

struct QuadResult {
  Complex value;
  double error = 0.0;
  long evaluations = 0;
  long panels = 0;
};

using Integrand = std::function<Complex(double)>;

/// Throws Error(QuadratureFailure) when the tolerance is not met within the
/// subdivision budget, and Error(InvalidArgument) for a non-finite interval.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

/// Single-threaded reference driver (same panels, same reduction order).
QuadResult integrate_serial(const Integrand& f, double a, double b, const QuadOptions& opt = {});

}  // namespace invosc
