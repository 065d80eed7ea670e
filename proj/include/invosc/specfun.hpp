#pragma once

// Complex special functions: log-gamma, Kummer's confluent hypergeometric
// function 1F1(a; b; z) and Hermite polynomials of complex argument.

#include <utility>

#include "invosc/types.hpp"

namespace invosc {

/// Numerical policy for 1F1.
///
/// The Kummer series is summed for |z| <= switch_radius; beyond that the
/// large-|z| expansion is used, each of its two correction series being cut at
/// the smallest term or after asymp_terms terms, whichever comes first.
struct SeriesControl {
  int max_terms = 800;
  double rel_tol = 1e-30;
  double switch_radius = 30.0;
  int asymp_terms = 40;

  /// Throws Error(InvalidArgument) when a field violates its invariant.
  void validate() const;
};

/// Principal log Gamma(z). Throws Error(Pole) within 1e-12 of 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// 1/Gamma(z); exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// True when z lies within tol of a non-positive integer.
bool is_nonpositive_integer(Complex z, double tol = 1e-12) noexcept;

Complex hyp1f1_series(Complex a, Complex b, Complex z, const SeriesControl& ctl = {});
Complex hyp1f1_asymptotic(Complex a, Complex b, Complex z, const SeriesControl& ctl = {});
Complex hyp1f1(Complex a, Complex b, Complex z, const SeriesControl& ctl = {});

/// d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z).
Complex hyp1f1_derivative(Complex a, Complex b, Complex z, const SeriesControl& ctl = {});

/// Physicists' Hermite polynomial H_n(z).
Complex hermite(int n, Complex z);

/// Gamma(t + 1/2) / Gamma(t) carried to ~30 digits, returned as an unevaluated
/// sum (hi, lo). Zero when t is a pole of Gamma; throws Error(Pole) when
/// t + 1/2 is. The second overload takes t as the unevaluated sum t + t_lo.
std::pair<Complex, Complex> gamma_ratio_half_extended(Complex t);
std::pair<Complex, Complex> gamma_ratio_half_extended(Complex t, Complex t_lo);

/// A value of 1F1 together with its z-derivative.
struct KummerValue {
  Complex value;
  Complex deriv;
};

/// The two terms of the large-|z| expansion, kept apart so that callers can
/// cancel one of them analytically.
struct KummerParts {
  KummerValue algebraic;    // ~ z^{-a}
  KummerValue exponential;  // ~ e^z z^{a-b}
};

/// 1F1(a; b; .) for fixed parameters. The Gamma-function prefactors of the
/// large-|z| expansion are computed once at construction, so repeated
/// evaluation along a curve only pays for the series.
class KummerFunction {
 public:
  KummerFunction(Complex a, Complex b, SeriesControl ctl = {});

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  const SeriesControl& control() const noexcept { return ctl_; }

  Complex operator()(Complex z) const;
  Complex series(Complex z) const;
  Complex asymptotic(Complex z) const;

  bool use_series(Complex z) const noexcept { return std::abs(z) <= ctl_.switch_radius; }

  /// exp(log_scale) * (1F1, d/dz 1F1). The scale is folded into the
  /// exponents of the large-|z| terms, so e.g. e^{-z/2} 1F1 stays finite
  /// where 1F1 alone would overflow.
  KummerValue scaled(Complex z, Complex log_scale = 0.0) const;
  KummerParts asymptotic_parts(Complex z, Complex log_scale = 0.0) const;

 private:
  Complex a_;
  Complex b_;
  SeriesControl ctl_;
  // log(Gamma(b)/Gamma(b-a)) and log(Gamma(b)/Gamma(a)); dead_* flags a pole.
  Complex log_alg_coeff_;
  Complex log_exp_coeff_;
  bool dead_alg_ = false;
  bool dead_exp_ = false;
};

/// Sum_s (p)_s (q)_s / s! * t^s cut at the smallest term (at most max_terms
/// terms). Returns the sum, its derivative with respect to t, and the size
/// of the first omitted term.
struct PoincareSum {
  Complex value;
  Complex dvalue_dt;
  int terms;
  double tail = 0.0;
};
PoincareSum poincare_2f0(Complex p, Complex q, Complex t, int max_terms);

}  // namespace invosc
