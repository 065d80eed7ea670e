#include "invosc/oscillator.hpp"

#include <cmath>
#include <string>

#include "invosc/error.hpp"

namespace invosc {

namespace {

const Complex kEighthTurn = std::exp(Complex(0.0, kPi / 4.0));  // e^{i pi/4}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be finite");
}

Complex half_ratio(Complex t) { return gamma_ratio_half_extended(t).first; }

}  // namespace

Complex omega_of(OscillatorKind kind) noexcept {
  switch (kind) {
    case OscillatorKind::Harmonic: return 1.0;
    case OscillatorKind::Free: return 0.0;
    case OscillatorKind::Inverted: return kI;
  }
  return 0.0;
}

std::string_view to_string(OscillatorKind kind) noexcept {
  switch (kind) {
    case OscillatorKind::Harmonic: return "harmonic";
    case OscillatorKind::Free: return "free";
    case OscillatorKind::Inverted: return "inverted";
  }
  return "?";
}

std::optional<OscillatorKind> parse_oscillator_kind(std::string_view s) noexcept {
  if (s == "harmonic") return OscillatorKind::Harmonic;
  if (s == "free") return OscillatorKind::Free;
  if (s == "inverted") return OscillatorKind::Inverted;
  return std::nullopt;
}

std::string_view to_string(ComboTag tag) noexcept {
  switch (tag) {
    case ComboTag::Even: return "even";
    case ComboTag::Odd: return "odd";
    case ComboTag::General: return "general";
    case ComboTag::Plus: return "plus";
    case ComboTag::Minus: return "minus";
    case ComboTag::Left: return "left";
    case ComboTag::Right: return "right";
  }
  return "?";
}

std::optional<ComboTag> parse_combo(std::string_view s) noexcept {
  for (ComboTag t : {ComboTag::Even, ComboTag::Odd, ComboTag::General, ComboTag::Plus, ComboTag::Minus,
                     ComboTag::Left, ComboTag::Right}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

void SolutionSpec::validate() const {
  require_finite(energy, "energy");
  require_finite(combo.C, "C");
  require_finite(combo.D, "D");
  switch (combo.tag) {
    case ComboTag::Plus:
    case ComboTag::Minus:
    case ComboTag::Left:
    case ComboTag::Right:
      if (kind != OscillatorKind::Inverted) {
        throw Error(ErrorKind::UnsupportedKind,
                    std::string(to_string(combo.tag)) + " combination exists only for the inverted oscillator");
      }
      break;
    default: break;
  }
}

bool SolutionSpec::is_real() const noexcept {
  switch (combo.tag) {
    case ComboTag::Plus:
    case ComboTag::Minus: return false;
    default: return true;
  }
}

WaveEval parity_even(Complex omega, Complex E, double x) {
  const double ax = std::abs(x);
  const Complex z = omega * ax * ax;
  const KummerFunction M(0.25 - E / (2.0 * omega), 0.5);
  const KummerValue s = M.scaled(z, -0.5 * z);
  const Complex d = 2.0 * omega * ax * (s.deriv - 0.5 * s.value);
  return {s.value, x < 0 ? -d : d};
}

WaveEval parity_odd(Complex omega, Complex E, double x) {
  const double ax = std::abs(x);
  const Complex z = omega * ax * ax;
  const KummerFunction M(0.75 - E / (2.0 * omega), 1.5);
  const KummerValue s = M.scaled(z, -0.5 * z);
  const Complex v = ax * s.value;
  return {x < 0 ? -v : v, (1.0 - z) * s.value + 2.0 * z * s.deriv};
}

WaveEval psi_even(Complex E, double x) { return parity_even(kI, E, x); }
WaveEval psi_odd(Complex E, double x) { return parity_odd(kI, E, x); }

WaveEval general_solution(const SolutionSpec& spec, double x) {
  spec.validate();
  if (spec.kind == OscillatorKind::Free) {
    throw Error(ErrorKind::UnsupportedKind, "the free particle has no confluent hypergeometric form");
  }
  const Complex w = omega_of(spec.kind);
  WaveEval r{0.0, 0.0};
  if (spec.combo.C != 0.0) {
    const WaveEval e = parity_even(w, spec.energy, x);
    r.value += spec.combo.C * e.value;
    r.deriv += spec.combo.C * e.deriv;
  }
  if (spec.combo.D != 0.0) {
    const WaveEval o = parity_odd(w, spec.energy, x);
    r.value += spec.combo.D * o.value;
    r.deriv += spec.combo.D * o.deriv;
  }
  return r;
}

Complex asymptotic_even(Complex E, double x, double x_min) {
  if (!(x >= x_min)) throw Error(ErrorKind::Domain, "asymptotic form needs x >= " + std::to_string(x_min));
  const Complex ph = kI * (kPi / 8.0 - 0.5 * x * x);
  const Complex lx = std::log(x);
  const Complex pre = std::sqrt(kPi) * std::exp(-kPi * E / 4.0) / std::sqrt(x);
  return pre * (std::exp(ph - kI * E * lx) * rgamma(0.25 - kI * E / 2.0) +
                std::exp(-ph + kI * E * lx) * rgamma(0.25 + kI * E / 2.0));
}

Complex asymptotic_odd(Complex E, double x, double x_min) {
  if (!(x >= x_min)) throw Error(ErrorKind::Domain, "asymptotic form needs x >= " + std::to_string(x_min));
  const Complex ph = kI * (3.0 * kPi / 8.0 - 0.5 * x * x);
  const Complex lx = std::log(x);
  const Complex pre = std::sqrt(kPi) * std::exp(-kPi * E / 4.0) / (2.0 * std::sqrt(x));
  return pre * (std::exp(ph - kI * E * lx) * rgamma(0.75 - kI * E / 2.0) +
                std::exp(-ph + kI * E * lx) * rgamma(0.75 + kI * E / 2.0));
}

NormalizationNE normalization_NE(double E) {
  require_finite(E, "energy");
  const Complex lg = Complex(0.0, kPi / 8.0) + kPi * E / 4.0 + (kI * E / 2.0 - 1.0) * std::log(2.0) +
                     ln_gamma(Complex(0.5, -E)) - 0.5 * std::log(kPi) - ln_gamma(Complex(0.75, -E / 2.0));
  return {E, std::exp(lg)};
}

Complex kappa_P(Complex E) { return 2.0 * std::conj(kEighthTurn) * half_ratio(0.25 - kI * E / 2.0); }
Complex kappa_N(Complex E) { return 2.0 * kEighthTurn * half_ratio(0.25 + kI * E / 2.0); }

double left_coefficient(double E) { return 0.5 * (kappa_P(E) + kappa_N(E)).real(); }

WaveEval psi_combo(const SolutionSpec& spec, double x) {
  spec.validate();
  if (spec.kind != OscillatorKind::Inverted) {
    throw Error(ErrorKind::UnsupportedKind, "combinations are defined for the inverted oscillator");
  }
  const double E = spec.energy;
  Complex ce = 1.0;
  Complex co = 0.0;
  switch (spec.combo.tag) {
    case ComboTag::Plus: {
      const Complex n = normalization_NE(E).value;
      ce = n;
      co = -n * kappa_P(E);
      break;
    }
    case ComboTag::Minus: {
      const Complex n = normalization_NE(E).value;
      ce = n;
      co = n * kappa_P(E);
      break;
    }
    case ComboTag::Left: co = -left_coefficient(E); break;
    case ComboTag::Right: co = left_coefficient(E); break;
    default: throw Error(ErrorKind::InvalidArgument, "psi_combo handles plus, minus, left and right");
  }
  const WaveEval e = psi_even(E, x);
  const WaveEval o = psi_odd(E, x);
  return {ce * e.value + co * o.value, ce * e.deriv + co * o.deriv};
}

WaveEval free_plane_wave(int sign, double E, double x) {
  const Complex k = std::sqrt(Complex(2.0 * E));
  const Complex ik = (sign >= 0 ? 1.0 : -1.0) * kI * k;
  const Complex v = std::exp(ik * x);
  return {v, ik * v};
}

WaveEval evaluate(const SolutionSpec& spec, double x) {
  spec.validate();
  switch (spec.combo.tag) {
    case ComboTag::Plus:
    case ComboTag::Minus:
    case ComboTag::Left:
    case ComboTag::Right: return psi_combo(spec, x);
    default: break;
  }
  const double C = spec.combo.tag == ComboTag::Odd ? 0.0 : spec.combo.C;
  const double D = spec.combo.tag == ComboTag::Even ? 0.0 : spec.combo.D;
  if (spec.kind == OscillatorKind::Free) {
    const Complex k = std::sqrt(Complex(2.0 * spec.energy));
    const Complex c = std::cos(k * x);
    const Complex s = (k == 0.0) ? Complex(x) : std::sin(k * x) / k;
    const Complex sd = (k == 0.0) ? Complex(0.0) : -k * std::sin(k * x);
    return {C * c + D * s, C * sd + D * c};
  }
  SolutionSpec g = spec;
  g.combo = Combo::general(C, D);
  return general_solution(g, x);
}

Potential oscillator_potential(OscillatorKind kind) { return quadratic_potential(omega_of(kind)); }

Wave solution_wave(const SolutionSpec& spec) {
  spec.validate();
  return Wave::eigen([spec](double x) { return evaluate(spec, x); }, oscillator_potential(spec.kind), spec.energy);
}

Complex window_inner_product(const Integrand& f, const Integrand& g, double L, const QuadOptions& opt) {
  if (!(L > 0.0)) throw Error(ErrorKind::InvalidArgument, "window half-width must be > 0");
  return integrate([&](double x) { return std::conj(f(x)) * g(x); }, -L, L, opt).value;
}

Complex mellin_basis(Sigma sigma, double lambda, double x) {
  if (x == 0.0) throw Error(ErrorKind::Domain, "Mellin basis is singular at x = 0");
  const bool on = sigma == Sigma::Plus ? x > 0.0 : x < 0.0;
  if (!on) return 0.0;
  return std::exp((kI * lambda - 0.5) * std::log(std::abs(x))) / std::sqrt(2.0 * kPi);
}

Complex integral_representation_check(Sigma sigma, double E, double x, double p_cutoff, const QuadOptions& opt) {
  if (!(p_cutoff > 0.0)) throw Error(ErrorKind::InvalidArgument, "p_cutoff must be > 0");
  // p = +-s^2 removes the p^{-1/2} endpoint singularity: dp p^{-1/2} = 2 ds.
  const double sgn = sigma == Sigma::Plus ? 1.0 : -1.0;
  auto integrand = [=](double s) {
    const double p = sgn * s * s;
    const double phase = p * p / 4.0 + x * p + x * x / 2.0;
    return 2.0 * std::exp(Complex(0.0, phase) - 2.0 * kI * E * std::log(s));
  };
  QuadOptions o = opt;
  if (!o.wavenumber) {
    o.wavenumber = [=](double s) {
      return std::abs(s * s * s + sgn * 2.0 * x * s) + 2.0 * std::abs(E) / std::max(s, 1e-2);
    };
  }
  const Complex I = integrate(integrand, 0.0, std::sqrt(p_cutoff), o).value;
  return std::exp(kI * E / 2.0 * std::log(2.0)) / (2.0 * kPi) * I;
}

}  // namespace invosc
