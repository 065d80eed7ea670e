#include "invosc/ladder.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "invosc/error.hpp"
#include "invosc/grid.hpp"

namespace invosc {

namespace {

const double kSqrtHalf = std::sqrt(0.5);

// prefactor e^{s x^2/2}, Hermite argument alpha x, phase
struct FamilyForm {
  Complex s;
  Complex alpha;
  Complex phase;
};

FamilyForm form(LadderFamily f, int n) {
  const Complex quarter = std::exp(Complex(0.0, kPi / 4.0));
  switch (f) {
    case LadderFamily::BoundHarmonic: return {-1.0, 1.0, 1.0};
    case LadderFamily::NonphysHarmonic: return {1.0, kI, std::exp(Complex(0.0, -kPi * n / 2.0))};
    case LadderFamily::InvertedMinus: return {-kI, quarter, std::exp(Complex(0.0, kPi * n / 4.0))};
    case LadderFamily::InvertedPlus: return {kI, quarter * quarter * quarter, std::exp(Complex(0.0, -kPi * n / 4.0))};
  }
  return {};
}

}  // namespace

std::string_view to_string(LadderFamily f) noexcept {
  switch (f) {
    case LadderFamily::BoundHarmonic: return "bound-harmonic";
    case LadderFamily::NonphysHarmonic: return "nonphys-harmonic";
    case LadderFamily::InvertedMinus: return "inverted-minus";
    case LadderFamily::InvertedPlus: return "inverted-plus";
  }
  return "?";
}

OscillatorKind kind_of(LadderFamily family) noexcept {
  return (family == LadderFamily::BoundHarmonic || family == LadderFamily::NonphysHarmonic)
             ? OscillatorKind::Harmonic
             : OscillatorKind::Inverted;
}

LadderState make_ladder_state(LadderFamily family, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "ladder index must be >= 0");
  const double h = n + 0.5;
  Complex e;
  switch (family) {
    case LadderFamily::BoundHarmonic: e = h; break;
    case LadderFamily::NonphysHarmonic: e = -h; break;
    case LadderFamily::InvertedMinus: e = Complex(0.0, h); break;
    case LadderFamily::InvertedPlus: e = Complex(0.0, -h); break;
  }
  return {family, n, e};
}

WaveEval ladder_state(LadderFamily family, int n, double x) {
  make_ladder_state(family, n);
  const FamilyForm f = form(family, n);
  const double norm = 1.0 / (std::pow(2.0, 0.5 * n) * std::pow(kPi, 0.25) * std::sqrt(std::tgamma(n + 1.0)));
  const Complex z = f.alpha * x;
  const Complex g = std::exp(0.5 * f.s * x * x);
  const Complex hn = hermite(n, z);
  const Complex dhn = n > 0 ? 2.0 * n * hermite(n - 1, z) : 0.0;
  const Complex c = f.phase * norm * g;
  return {c * hn, c * (f.s * x * hn + f.alpha * dhn)};
}

Wave ladder_wave(LadderFamily family, int n) {
  const LadderState st = make_ladder_state(family, n);
  return Wave::eigen([family, n](double x) { return ladder_state(family, n, x); },
                     oscillator_potential(kind_of(family)), st.eigenvalue);
}

Jet apply_a(Complex omega, int sign, const Jet& f, double x) {
  const int n = f.order() - 1;
  const Jet fd = f.d();
  const Jet xf = Jet::variable(x, n) * f.truncated(n);
  return kSqrtHalf * ((sign > 0 ? -1.0 : 1.0) * fd + omega * xf);
}

Jet apply_H(const Jet& f, const Jet& V) {
  const int n = f.order() - 2;
  return -0.5 * f.d().d() + V.truncated(n) * f.truncated(n);
}

Wave ladder_apply(Complex omega, int sign, const Wave& psi) {
  if (psi.max_order() < 1) {
    throw Error(ErrorKind::MissingDerivative, "ladder operator needs the derivative of its argument");
  }
  std::optional<Complex> e;
  if (psi.energy()) e = *psi.energy() + (sign > 0 ? omega : -omega);
  const int max_order = psi.max_order() >= Wave::kUnbounded ? Wave::kUnbounded : psi.max_order() - 1;
  return Wave([omega, sign, psi](double x, int order) { return apply_a(omega, sign, psi.jet(x, order + 1), x); },
              max_order, e);
}

Wave hamiltonian_apply(Complex omega, const Wave& psi) {
  const Potential V = quadratic_potential(omega);
  const int max_order = psi.max_order() >= Wave::kUnbounded ? Wave::kUnbounded : psi.max_order() - 2;
  return Wave([V, psi](double x, int order) { return apply_H(psi.jet(x, order + 2), V(x, order)); }, max_order);
}

Wave damped_polynomial(std::vector<double> coeffs) {
  return Wave([coeffs = std::move(coeffs)](double x, int order) {
    const Jet X = Jet::variable(x, order);
    Jet p(order, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * X + Complex(*it);
    return p * exp(-0.25 * X * X);
  });
}

DiagnosticReport algebra_residuals(Complex omega, int trials, unsigned seed, double tol) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const Potential V = quadratic_potential(omega);
  const auto xs = linspace(-5.0, 5.0, 101);

  double r_hp = 0, r_hm = 0, r_comm = 0, r_f1 = 0, r_f2 = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> c(5);
    for (auto& v : c) v = coef(rng);
    const Wave f = damped_polynomial(c);
    const auto res = sample(
        [&](double x) {
          const Jet fj = f.jet(x, 4);
          const Jet v = V(x, 4);
          auto a = [&](int s, const Jet& j) { return apply_a(omega, s, j, x); };
          auto H = [&](const Jet& j) { return apply_H(j, v); };
          const double scale = 1.0 + std::abs(fj[0]);
          std::array<double, 5> r{};
          for (int s : {+1, -1}) {
            const Complex lhs = H(a(s, fj))[0] - a(s, H(fj))[0];
            r[s > 0 ? 0 : 1] = std::abs(lhs - (s > 0 ? omega : -omega) * a(s, fj)[0]) / scale;
          }
          const Complex am_ap = a(-1, a(+1, fj))[0];
          const Complex ap_am = a(+1, a(-1, fj))[0];
          const Complex hf = H(fj)[0];
          r[2] = std::abs(am_ap - ap_am - omega * fj[0]) / scale;
          r[3] = std::abs(ap_am + 0.5 * omega * fj[0] - hf) / scale;
          r[4] = std::abs(am_ap - 0.5 * omega * fj[0] - hf) / scale;
          return r;
        },
        xs);
    for (const auto& r : res) {
      r_hp = std::max(r_hp, r[0]);
      r_hm = std::max(r_hm, r[1]);
      r_comm = std::max(r_comm, r[2]);
      r_f1 = std::max(r_f1, r[3]);
      r_f2 = std::max(r_f2, r[4]);
    }
  }
  DiagnosticReport rep;
  rep.suite = "ladder";
  rep.add("[H,a+]-omega a+", r_hp, tol);
  rep.add("[H,a-]+omega a-", r_hm, tol);
  rep.add("[a-,a+]-omega", r_comm, tol);
  rep.add("a+a- + omega/2 - H", r_f1, tol);
  rep.add("a-a+ - omega/2 - H", r_f2, tol);
  return rep;
}

}  // namespace invosc
