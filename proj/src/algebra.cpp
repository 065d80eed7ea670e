#include "invosc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/ladder.hpp"
#include "invosc/quadrature.hpp"

namespace invosc {

namespace {

const Potential& V0() {
  static const Potential v = quadratic_potential(kI);
  return v;
}

// g to one order above h
struct GH {
  Jet g;
  Jet h;
};

GH coefficients(const ComplexTransform& T, double x, int order) {
  Jet g = T.g_jet(x, order + 1);
  const Jet gn = g.truncated(order);
  Jet h = 0.5 * g.d() + 0.5 * gn * gn - 2.0 * V0()(x, order) + Complex(T.constants().d);
  return {std::move(g), std::move(h)};
}

Jet bplus(const GH& c, const Jet& f) {
  const Jet f1 = f.d();
  return 0.5 * (f1.d() - c.g * f1 + c.h * f);
}

Jet bminus(const GH& c, const Jet& f) {
  const Jet f1 = f.d();
  return 0.5 * (f1.d() + c.g * f1 + (c.h + c.g.d()) * f);
}

Jet h2(const ComplexTransform& T, const Jet& f, double x) {
  const int n = f.order() - 2;
  return apply_H(f, T.V2_jet(x, n));
}

int reduced(int max_order, int by) { return max_order >= Wave::kUnbounded ? Wave::kUnbounded : max_order - by; }

// sup |lhs - rhs| / sup |rhs| over a grid
template <class F>
double sup_rel(const F& pair_at, const std::vector<double>& xs) {
  const auto r = sample(pair_at, xs);
  double num = 0.0, den = 0.0;
  for (const auto& [l, rr] : r) {
    num = std::max(num, std::abs(l - rr));
    den = std::max(den, std::abs(rr));
  }
  return num / std::max(den, 1e-300);
}

}  // namespace

std::string_view to_string(Normalization n) noexcept {
  return n == Normalization::Raw ? "raw" : "bfactor";
}

void PartnerEigenfunction::validate() const {
  const FactorizationEnergy f = validate_epsilon(eps);
  if (!f.usable()) {
    throw Error(ErrorKind::Classification,
                "factorization energy is excluded: " + std::string(to_string(f.classification)));
  }
  if (!std::isfinite(E)) throw Error(ErrorKind::InvalidArgument, "energy must be finite");
  if (base_combo != ComboTag::Plus && base_combo != ComboTag::Minus && base_combo != ComboTag::Left &&
      base_combo != ComboTag::Right) {
    throw Error(ErrorKind::InvalidArgument, "base combination must be plus, minus, left or right");
  }
}

Jet apply_Bplus(const ComplexTransform& T, const Jet& f, double x) {
  if (f.order() < 2) throw Error(ErrorKind::MissingDerivative, "B+ needs two derivatives");
  return bplus(coefficients(T, x, f.order() - 2), f);
}

Jet apply_Bminus(const ComplexTransform& T, const Jet& f, double x) {
  if (f.order() < 2) throw Error(ErrorKind::MissingDerivative, "B- needs two derivatives");
  return bminus(coefficients(T, x, f.order() - 2), f);
}

Jet apply_H2(const ComplexTransform& T, const Jet& f, double x) {
  if (f.order() < 2) throw Error(ErrorKind::MissingDerivative, "H2 needs two derivatives");
  return h2(T, f, x);
}

Complex apply_Bplus(Complex eps, const Wave& f, double x) {
  if (f.max_order() < 2) throw Error(ErrorKind::MissingDerivative, "B+ needs the second derivative of its argument");
  return apply_Bplus(ComplexTransform(eps), f.jet(x, 2), x)[0];
}

Wave bplus_wave(const ComplexTransform& T, const Wave& f) {
  if (f.max_order() < 2) throw Error(ErrorKind::MissingDerivative, "B+ needs the second derivative of its argument");
  return Wave([T, f](double x, int order) { return bplus(coefficients(T, x, order), f.jet(x, order + 2)); },
              reduced(f.max_order(), 2), f.energy());
}

Wave bminus_wave(const ComplexTransform& T, const Wave& f) {
  if (f.max_order() < 2) throw Error(ErrorKind::MissingDerivative, "B- needs the second derivative of its argument");
  return Wave([T, f](double x, int order) { return bminus(coefficients(T, x, order), f.jet(x, order + 2)); },
              reduced(f.max_order(), 2), f.energy());
}

Wave apply_L(const ComplexTransform& T, int sign, const Wave& f) {
  if (!f.energy()) throw Error(ErrorKind::InvalidArgument, "L needs an eigenfunction tagged with its energy");
  if (f.max_order() < 5) throw Error(ErrorKind::MissingDerivative, "L needs five derivatives of its argument");
  const int s = sign > 0 ? 1 : -1;
  auto fn = [T, s, f](double x, int order) {
    const GH c = coefficients(T, x, order + 3);
    const Jet b = bminus(c, f.jet(x, order + 5));
    return bplus(c, apply_a(kI, s, b, x));
  };
  return Wave(std::move(fn), reduced(f.max_order(), 5), *f.energy() + Complex(0.0, s));
}

Potential partner_potential(const ComplexTransform& T) {
  return [T](double x, int order) { return T.V2_jet(x, order); };
}

Wave base_eigenfunction(const PartnerEigenfunction& p) {
  return solution_wave(SolutionSpec{OscillatorKind::Inverted, p.E, Combo::of(p.base_combo)});
}

Wave transformed_wave(const PartnerEigenfunction& p) {
  p.validate();
  const ComplexTransform T(p.eps);
  const Wave psi = base_eigenfunction(p);
  const double k = p.normalization == Normalization::Raw ? kClosedFormFactor : 1.0 / std::abs(p.E - p.eps);
  auto fn = [T, psi, k](double x, int order) { return k * bplus(coefficients(T, x, order), psi.jet(x, order + 2)); };
  return Wave(std::move(fn), Wave::kUnbounded, p.E);
}

WaveEval transformed_eigenfunction(const PartnerEigenfunction& p, double x) {
  const Jet j = transformed_wave(p).jet(x, 1);
  return {j[0], j[1]};
}

Complex closed_form_psi2(const PartnerEigenfunction& p, double x) {
  p.validate();
  const ComplexTransform T(p.eps);
  const WaveEval u = T.seed(x);
  const Complex alpha = superpotential(u);
  if (T.w_vanishes(x)) throw Error(ErrorKind::WZero, "w vanishes at x = " + std::to_string(x));
  const double g = std::norm(u.value) / T.w(x);
  const WaveEval psi = evaluate(SolutionSpec{OscillatorKind::Inverted, p.E, Combo::of(p.base_combo)}, x);
  return g * (-psi.deriv + alpha * psi.value) + 2.0 * (p.eps - p.E) * psi.value;
}

Complex P5_eval(Complex E, Complex eps) {
  const Complex eb = std::conj(eps);
  return (E - eps) * (E - eb) * (E - eps - kI) * (E - eb - kI) * (E - 0.5 * kI);
}

Complex Q4_eval(Complex E, Complex eps) { return P5_eval(E + kI, eps) - P5_eval(E, eps); }

// ---------------------------------------------------------------- checks

DiagnosticReport algebra_identities(const AlgebraOptions& opt) {
  DiagnosticReport rep;
  rep.suite = "algebra";
  const ComplexTransform T(opt.eps);
  const Complex eps = opt.eps, eb = std::conj(opt.eps);
  const auto xs = linspace(opt.xmin, opt.xmax, opt.samples);
  using Pair = std::pair<Complex, Complex>;

  // Gaussian-damped test functions
  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<Wave> tests;
  for (int t = 0; t < 3; ++t) {
    std::vector<double> c(5);
    for (auto& v : c) v = coef(rng);
    tests.push_back(damped_polynomial(c));
  }

  double r_int = 0.0, r_bb = 0.0;
  for (const Wave& f : tests) {
    r_int = std::max(r_int, sup_rel(
                                [&](double x) {
                                  const Jet fj = f.jet(x, 4);
                                  const GH c = coefficients(T, x, 2);
                                  const Complex l = h2(T, bplus(c, fj), x)[0];
                                  const Complex r = bplus(c, apply_H(fj, V0()(x, 2)))[0];
                                  return Pair{l, r};
                                },
                                xs));
    r_bb = std::max(r_bb, sup_rel(
                              [&](double x) {
                                const Jet fj = f.jet(x, 4);
                                const GH c = coefficients(T, x, 2);
                                const Complex l = bminus(c, bplus(c, fj))[0];
                                const Jet k = apply_H(fj, V0()(x, 2)) - eb * fj.truncated(2);
                                const Complex r = (apply_H(k, V0()(x, 0)) - eps * k.truncated(0))[0];
                                return Pair{l, r};
                              },
                              xs));
  }
  rep.add("H2 B+ = B+ H0", r_int, opt.tol_intertwine);
  rep.add("B- B+ = (H0-eps)(H0-conj eps)", r_bb, opt.tol_ladder);

  // anti-hermiticity of L on damped functions
  {
    QuadOptions q;
    q.rel_tol = 1e-10;
    q.abs_tol = 1e-13;
    double worst = 0.0;
    const Wave f = tests[0].with_energy(0.0), g = tests[1].with_energy(0.0);
    for (int s : {+1, -1}) {
      const Wave Lf = apply_L(T, s, f), Lg = apply_L(T, s, g);
      const auto lhs = integrate([&](double x) { return std::conj(Lf.value(x)) * g.value(x); }, -14.0, 14.0, q);
      const auto rhs = integrate([&](double x) { return std::conj(f.value(x)) * Lg.value(x); }, -14.0, 14.0, q);
      worst = std::max(worst, std::abs(lhs.value + rhs.value) / (std::abs(lhs.value) + std::abs(rhs.value)));
    }
    rep.add("<L f, g> = -<f, L g>", worst, opt.tol_quad);
  }

  // eigenfunctions of H2
  double r_bpsi = 0.0, r_real = 0.0, r_pp = 0.0, r_hl = 0.0, r_p5 = 0.0, r_q4 = 0.0;
  for (double E : {-2.0, -1.0, 0.0, 1.0}) {
    const PartnerEigenfunction p{eps, E, ComboTag::Left, Normalization::BFactor};
    const Wave psi = base_eigenfunction(p);
    const Wave f = transformed_wave(p);
    const double kB = std::abs(E - eps);
    r_bpsi = std::max(r_bpsi, sup_rel(
                                  [&](double x) {
                                    const Complex l = apply_Bplus(T, psi.jet(x, 2), x)[0];
                                    // psi2 from the closed form, scaled to the B-factor normalization
                                    const Complex psi2 = closed_form_psi2(p, x) / (kClosedFormFactor * kB);
                                    return Pair{l, kB * psi2};
                                  },
                                  xs));
    {
      const auto v = sample([&](double x) { return f.value(x); }, xs);
      double im = 0.0, mag = 0.0;
      for (const Complex& c : v) {
        im = std::max(im, std::abs(c.imag()));
        mag = std::max(mag, std::abs(c));
      }
      r_real = std::max(r_real, im / mag);
    }
    const Complex pE = (E - eps) * (E - eb);
    r_pp = std::max(r_pp, sup_rel(
                              [&](double x) {
                                const Jet fj = f.jet(x, 4);
                                const GH c = coefficients(T, x, 2);
                                return Pair{bplus(c, bminus(c, fj))[0], pE * fj[0]};
                              },
                              xs));
    for (int s : {+1, -1}) {
      const Wave Lf = apply_L(T, s, f);
      const Complex El = E + Complex(0.0, s);
      r_hl = std::max(r_hl, sup_rel(
                                [&](double x) {
                                  const Jet j = Lf.jet(x, 2);
                                  return Pair{h2(T, j, x)[0], El * j[0]};
                                },
                                xs));
    }
    const Wave lm = apply_L(T, -1, f), lp = apply_L(T, +1, f);
    const Wave lpm = apply_L(T, +1, lm), lmp = apply_L(T, -1, lp);
    const Complex P5 = P5_eval(E, eps), Q4 = Q4_eval(E, eps);
    r_p5 = std::max(r_p5, sup_rel([&](double x) { return Pair{lpm.value(x), P5 * f.value(x)}; }, xs));
    r_q4 = std::max(r_q4, sup_rel([&](double x) { return Pair{lmp.value(x) - lpm.value(x), Q4 * f.value(x)}; }, xs));
  }
  rep.add("B+ psi_E = |E-eps| psi2", r_bpsi, opt.tol_intertwine);
  rep.add("Im psi2 (left)", r_real, opt.tol_first);
  rep.add("B+ B- = (H2-eps)(H2-conj eps)", r_pp, opt.tol_stack);
  rep.add("[H2, L] = +-i L", r_hl, opt.tol_ladder);
  rep.add("L+ L- = P5(H2)", r_p5, opt.tol_stack);
  rep.add("[L-, L+] = Q4(H2)", r_q4, opt.tol_stack);

  // polynomial bookkeeping
  const double root = std::max({std::abs(P5_eval(eps, eps)), std::abs(P5_eval(eb, eps)), std::abs(P5_eval(0.5 * kI, eps))});
  rep.add("P5 roots", root, 1e-12);
  // fourth difference of a quartic is 24 times its leading coefficient
  Complex d4 = 0.0;
  const int binom[5] = {1, -4, 6, -4, 1};
  for (int k = 0; k <= 4; ++k) d4 += static_cast<double>(binom[k]) * Q4_eval(Complex(4.0 - k), eps);
  rep.add("Q4 leading coefficient 5i", std::abs(d4 / 24.0 - Complex(0.0, 5.0)) / 5.0, 1e-9);
  return rep;
}

// ---------------------------------------------------------------- shooting

std::vector<double> shooting_tail_ratios(const ComplexTransform& T, const std::vector<double>& energies, double L,
                                         double step) {
  if (!(L > 0.0) || !(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "L and step must be positive");
  const int n = static_cast<int>(std::ceil(L / step));
  const double h = L / n;
  // V2 at half steps on [-L, L], shared by every energy and shot
  const auto xs = linspace(-L, L, 4 * n + 1);
  const auto V = sample([&](double x) { return T.V2(x); }, xs);
  const auto at = [&](int dir, int half) { return V[static_cast<std::size_t>(2 * n + dir * half)]; };

  std::vector<double> out(energies.size());
  for (std::size_t e = 0; e < energies.size(); ++e) {
    const double E = energies[e];
    double worst = std::numeric_limits<double>::infinity();
    for (int shot = 0; shot < 2; ++shot) {
      for (int dir : {+1, -1}) {
        // y'' = 2(V - E) y in the outward variable s = dir * x
        double y = shot == 0 ? 1.0 : 0.0, dy = shot == 0 ? 0.0 : 1.0;
        double inner = 0.0, outer = 0.0;
        const auto acc = [&](double s, double v) {
          if (s > L / 4 && s <= L / 2) inner += v;
          if (s > L / 2) outer += v;
        };
        for (int k = 0; k < n; ++k) {
          const double f0 = 2.0 * (at(dir, 2 * k) - E), fm = 2.0 * (at(dir, 2 * k + 1) - E),
                       f1 = 2.0 * (at(dir, 2 * k + 2) - E);
          const double k1y = dy, k1v = f0 * y;
          const double k2y = dy + 0.5 * h * k1v, k2v = fm * (y + 0.5 * h * k1y);
          const double k3y = dy + 0.5 * h * k2v, k3v = fm * (y + 0.5 * h * k2y);
          const double k4y = dy + h * k3v, k4v = f1 * (y + h * k3y);
          y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
          dy += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
          acc((k + 1) * h, y * y * h);
        }
        worst = std::min(worst, outer / inner);
      }
    }
    out[e] = worst;
  }
  return out;
}

}  // namespace invosc
