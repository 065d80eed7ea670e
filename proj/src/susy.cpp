#include "invosc/susy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail/kummer_dd.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"

namespace invosc {

namespace {

using detail::CDD;
using detail::DD;

constexpr double kTiny = std::numeric_limits<double>::min() * 1e10;

// e^{-i pi/4} and e^{+i pi/4} in double-double
const CDD kMinusEighth{DD(0.7071067811865476, -4.833646656726457e-17), DD(-0.7071067811865476, 4.833646656726457e-17)};
const CDD kPlusEighth{DD(0.7071067811865476, -4.833646656726457e-17), DD(0.7071067811865476, -4.833646656726457e-17)};

Potential V0_jet() { return quadratic_potential(kI); }

// x > 0, |x^2| inside the series radius: e^{-z/2}[M_e - kappa x M_o] and its
// x-derivative with the bracket carried in double-double (the two terms
// cancel to many digits when kappa is the decaying combination, so a, its
// shifts and kappa must agree beyond double precision).
// reflect: the same function through M(a, b, z) = e^z M(b - a, b, -z), whose
// terms stay small when Re a is large.
WaveEval cancel_series(const CDD& a, const CDD& kappa, double x, const SeriesControl& ctl, bool reflect = false) {
  const DD xx = detail::two_prod(x, x);
  const CDD z(DD(0.0), xx);
  const CDD one(Complex(1.0));
  const CDD half(Complex(0.5));
  const CDD b_e(Complex(0.5)), b_o(Complex(1.5)), b_e1(Complex(1.5)), b_o1(Complex(2.5));
  if (!reflect) {
    const CDD ao = a + half;
    const CDD me = detail::kummer_series_dd(a, b_e, z, ctl);
    const CDD dme = detail::kummer_series_dd(a + one, b_e1, z, ctl) * a * 2.0;
    const CDD mo = detail::kummer_series_dd(ao, b_o, z, ctl);
    const CDD dmo = detail::kummer_series_dd(ao + one, b_o1, z, ctl) * ao / b_o;
    const CDD bracket = me - kappa * mo * x;
    const CDD dbracket = CDD(Complex(0.0, 2.0 * x)) * (dme - me * 0.5) - kappa * ((one - z) * mo + z * dmo * 2.0);
    const Complex damp = std::exp(Complex(0.0, -0.5) * (xx.hi + xx.lo));
    return {damp * bracket.to_complex(), damp * dbracket.to_complex()};
  }
  const CDD mz = z * -1.0;
  const CDD ae = half - a, ao = one - a;
  const CDD me = detail::kummer_series_dd(ae, b_e, mz, ctl);
  const CDD dme = detail::kummer_series_dd(ae + one, b_e1, mz, ctl) * ae * 2.0;
  const CDD mo = detail::kummer_series_dd(ao, b_o, mz, ctl);
  const CDD dmo = detail::kummer_series_dd(ao + one, b_o1, mz, ctl) * ao / b_o;
  const CDD bracket = me - kappa * mo * x;
  const CDD dbracket = CDD(Complex(0.0, 2.0 * x)) * (me * 0.5 - dme) - kappa * ((one + z) * mo - z * dmo * 2.0);
  const Complex damp = std::exp(Complex(0.0, 0.5) * (xx.hi + xx.lo));
  return {damp * bracket.to_complex(), damp * dbracket.to_complex()};
}

CDD kappa_dd(const CDD& t, const CDD& phase) {
  const Complex hi(t.re.hi, t.im.hi), lo(t.re.lo, t.im.lo);
  return detail::to_cdd(gamma_ratio_half_extended(hi, lo)) * phase * 2.0;
}

// 1/4 + i eps/2, exact
CDD seed_a(Complex eps) { return CDD(Complex(0.25)) + CDD(Complex(-0.5 * eps.imag(), 0.5 * eps.real())); }

// Smallest Poincare term of 2F0(p, q; 1/R).
double min_term(Complex p, Complex q, double R) {
  double term = 1.0, best = 1.0;
  for (int s = 0; s < 400; ++s) {
    term *= std::abs((p + static_cast<double>(s)) * (q + static_cast<double>(s))) / (s + 1.0) / R;
    if (term >= best) break;
    best = term;
  }
  return best;
}

// Switch radius |z| for the seeds: the asymptotic error is about the
// smallest term of the surviving 2F0(p, q), the double-double series loses
// about e^{|z|} 1e-33.
double seed_switch(Complex p, Complex q) {
  double best_R = 30.0, best = std::numeric_limits<double>::infinity();
  for (int R = 30; R <= 60; ++R) {
    const double e = std::max(min_term(p, q, R), 1e-33 * std::exp(static_cast<double>(R)));
    if (e < best) {
      best = e;
      best_R = R;
    }
  }
  return best_R;
}

}  // namespace

double inverted_potential(double x) noexcept { return -0.5 * x * x; }

// ---------------------------------------------------------------- energies

std::string_view to_string(EpsClass c) noexcept {
  switch (c) {
    case EpsClass::QuadrantI_II: return "QuadrantI_II";
    case EpsClass::QuadrantIII_IV: return "QuadrantIII_IV";
    case EpsClass::ExcludedRealAxis: return "ExcludedRealAxis";
    case EpsClass::ExcludedLatticePoint: return "ExcludedLatticePoint";
  }
  return "?";
}

FactorizationEnergy validate_epsilon(Complex eps) {
  FactorizationEnergy f;
  f.eps = eps;
  const double im = std::abs(eps.imag());
  f.lattice_m = std::max(0, static_cast<int>(std::lround(im - 0.5)));
  const double target = f.lattice_m + 0.5;
  f.lattice_distance = std::abs(Complex(eps.real(), im - target));
  if (!is_finite(eps) || im < 1e-9) {
    f.classification = EpsClass::ExcludedRealAxis;
  } else if (f.lattice_distance < 1e-9) {
    f.classification = EpsClass::ExcludedLatticePoint;
  } else {
    f.classification = eps.imag() > 0.0 ? EpsClass::QuadrantI_II : EpsClass::QuadrantIII_IV;
  }
  return f;
}

// ---------------------------------------------------------------- scans

std::string_view to_string(ZeroKind k) noexcept {
  switch (k) {
    case ZeroKind::SeedZero: return "seed-zero";
    case ZeroKind::WronskianZero: return "wronskian-zero";
    case ZeroKind::WZero: return "w-zero";
  }
  return "?";
}

SingularityReport singularity_scan(const std::function<double(double)>& f, double a, double b, int samples,
                                   ZeroKind kind, const std::function<double(double)>& scale) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "singularity scan needs at least 2 samples");
  if (!(a < b)) throw Error(ErrorKind::InvalidArgument, "singularity scan needs a < b");
  SingularityReport rep;
  rep.a = a;
  rep.b = b;
  const auto xs = linspace(a, b, samples);
  const auto fs = sample(f, xs);
  std::vector<double> rel(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const double s = scale ? scale(xs[i]) : 1.0;
    rel[i] = std::abs(fs[i]) / std::max(s, kTiny);
  }
  std::vector<bool> bracketed(fs.size(), false);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i] == 0.0) {
      rep.zeros.push_back({xs[i], kind});
      bracketed[i] = true;
      continue;
    }
    if (i + 1 < fs.size() && fs[i + 1] != 0.0 && std::signbit(fs[i]) != std::signbit(fs[i + 1])) {
      double lo = xs[i], hi = xs[i + 1], flo = fs[i];
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      rep.zeros.push_back({0.5 * (lo + hi), kind});
      bracketed[i] = bracketed[i + 1] = true;
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (bracketed[i] || rel[i] >= 1e-8) continue;
    const bool left_ok = i == 0 || rel[i] <= rel[i - 1];
    const bool right_ok = i + 1 == fs.size() || rel[i] <= rel[i + 1];
    if (left_ok && right_ok) rep.zeros.push_back({xs[i], kind});
  }
  std::sort(rep.zeros.begin(), rep.zeros.end(),
            [](const SingularPoint& p, const SingularPoint& q) { return p.location < q.location; });
  rep.is_singular = !rep.zeros.empty();
  return rep;
}

// ---------------------------------------------------------------- first order

Complex superpotential(const WaveEval& u) {
  if (std::abs(u.value) <= 1e-8 * std::abs(u.deriv) || u.value == 0.0) {
    throw Error(ErrorKind::SeedZero, "transformation function vanishes");
  }
  return u.deriv / u.value;
}

Complex superpotential(const Wave& u, double x) { return superpotential(u.eval(x)); }

double first_order_partner(double eps, double C, double D, double x) {
  const SolutionSpec s{OscillatorKind::Inverted, eps, Combo::general(C, D)};
  const Complex alpha = superpotential(evaluate(s, x));
  // (u'/u)' = 2(V0 - eps) - alpha^2
  return (inverted_potential(x) - (2.0 * (inverted_potential(x) - eps) - alpha * alpha)).real();
}

std::string_view to_string(SusyCase c) noexcept {
  switch (c) {
    case SusyCase::Real: return "real";
    case SusyCase::Confluent: return "confluent";
    case SusyCase::Complex: return "complex";
  }
  return "?";
}

// ---------------------------------------------------------------- real case

RealCaseTransform::RealCaseTransform(double eps1, Wave u1, double eps2, Wave u2, std::function<double(double)> V0)
    : eps1_(eps1), eps2_(eps2), u1_(std::move(u1)), u2_(std::move(u2)), V0_(std::move(V0)) {
  if (!std::isfinite(eps1) || !std::isfinite(eps2)) throw Error(ErrorKind::InvalidArgument, "non-finite energy");
  if (eps1 == eps2) {
    throw Error(ErrorKind::InvalidArgument, "real case needs eps1 != eps2 (the Wronskian would be constant)");
  }
}

RealCaseTransform RealCaseTransform::inverted(double eps1, Combo c1, double eps2, Combo c2) {
  const SolutionSpec s1{OscillatorKind::Inverted, eps1, c1};
  const SolutionSpec s2{OscillatorKind::Inverted, eps2, c2};
  return RealCaseTransform(eps1, solution_wave(s1), eps2, solution_wave(s2), inverted_potential);
}

std::array<Complex, 3> RealCaseTransform::wronskian(double x) const {
  const WaveEval a = u1_.eval(x);
  const WaveEval b = u2_.eval(x);
  const double k = 2.0 * (eps1_ - eps2_);
  return {a.value * b.deriv - a.deriv * b.value, k * a.value * b.value, k * (a.deriv * b.value + a.value * b.deriv)};
}

double RealCaseTransform::V2(double x) const {
  const WaveEval a = u1_.eval(x);
  const WaveEval b = u2_.eval(x);
  const auto [W, W1, W2] = wronskian(x);
  if (std::abs(W) <= 1e-14 * (std::abs(a.value * b.deriv) + std::abs(a.deriv * b.value)) || W == 0.0) {
    throw Error(ErrorKind::WronskianZero, "Wronskian vanishes at x = " + std::to_string(x));
  }
  const Complex l = W1 / W;
  return V0_(x) - (W2 / W - l * l).real();
}

SingularityReport RealCaseTransform::scan(double a, double b, int samples) const {
  // W is real up to a constant phase (seeds may carry one)
  Complex phase = 1.0;
  for (double x : linspace(a, b, 17)) {
    const Complex W = wronskian(x)[0];
    if (std::abs(W) > 0.0) {
      phase = std::conj(W) / std::abs(W);
      break;
    }
  }
  return singularity_scan([&](double x) { return (wronskian(x)[0] * phase).real(); }, a, b, samples,
                          ZeroKind::WronskianZero, [&](double x) {
                            const WaveEval p = u1_.eval(x);
                            const WaveEval q = u2_.eval(x);
                            return std::abs(p.value * q.deriv) + std::abs(p.deriv * q.value);
                          });
}

double real_case_partner(double eps1, const Wave& u1, double eps2, const Wave& u2, double x,
                         const std::function<double(double)>& V0) {
  return RealCaseTransform(eps1, u1, eps2, u2, V0).V2(x);
}

// ---------------------------------------------------------------- confluent case

ConfluentTransform::ConfluentTransform(double eps, Combo seed, double w0, double x0, QuadOptions quad)
    : eps_(eps), seed_(seed), w0_(w0), x0_(x0), quad_(std::move(quad)), memo_(std::make_shared<Memo>()) {
  if (!std::isfinite(eps) || !std::isfinite(w0) || !std::isfinite(x0)) {
    throw Error(ErrorKind::InvalidArgument, "confluent parameters must be finite");
  }
  const double C = seed.tag == ComboTag::Odd ? 0.0 : seed.C;
  const double D = seed.tag == ComboTag::Even ? 0.0 : seed.D;
  if (C == 0.0 && D == 0.0) throw Error(ErrorKind::InvalidArgument, "seed u = 0 is degenerate");
  if (seed.tag != ComboTag::Even && seed.tag != ComboTag::Odd && seed.tag != ComboTag::General) {
    throw Error(ErrorKind::InvalidArgument, "confluent seed must be a real combination C psi_e + D psi_o");
  }
  seed_ = Combo::general(C, D);
}

WaveEval ConfluentTransform::seed(double x) const {
  return evaluate(SolutionSpec{OscillatorKind::Inverted, eps_, seed_}, x);
}

double ConfluentTransform::w_quadrature(double x) const {
  const auto f = [this](double t) {
    const Complex u = seed(t).value;
    return Complex(std::norm(u));
  };
  return w0_ + integrate(f, x0_, x, quad_).value.real();
}

double ConfluentTransform::cumulative(int knot) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto& knots = memo_->knots;
  if (knots.empty()) knots[0] = 0.0;
  if (auto it = knots.find(knot); it != knots.end()) return it->second;
  const int step = knot > 0 ? 1 : -1;
  int k = 0;
  while (knots.count(k + step)) k += step;
  double acc = knots[k];
  const auto f = [this](double t) { return Complex(std::norm(seed(t).value)); };
  for (; k != knot; k += step) {
    acc += integrate(f, x0_ + k, x0_ + k + step, quad_).value.real();
    knots[k + step] = acc;
  }
  return acc;
}

double ConfluentTransform::antiderivative(double x) const {
  // v = du/d(eps) by a 4-point central difference; h shrinks as the
  // log-phase derivatives grow
  const double h = 2e-3 / std::max(1.0, std::log1p(std::abs(x)));
  auto u_at = [&](double e) { return evaluate(SolutionSpec{OscillatorKind::Inverted, e, seed_}, x); };
  const WaveEval p2 = u_at(eps_ + 2 * h), p1 = u_at(eps_ + h), m1 = u_at(eps_ - h), m2 = u_at(eps_ - 2 * h);
  const Complex v = (-p2.value + 8.0 * p1.value - 8.0 * m1.value + m2.value) / (12.0 * h);
  const Complex vd = (-p2.deriv + 8.0 * p1.deriv - 8.0 * m1.deriv + m2.deriv) / (12.0 * h);
  const WaveEval u = seed(x);
  return (-0.5 * (u.value * vd - u.deriv * v)).real();
}

double ConfluentTransform::w(double x) const {
  const double r = x - x0_;
  const double R = near_range();
  if (std::abs(r) <= R) {
    const int knot = static_cast<int>(std::trunc(r));
    const auto f = [this](double t) { return Complex(std::norm(seed(t).value)); };
    const double tail = integrate(f, x0_ + knot, x, quad_).value.real();
    return w0_ + cumulative(knot) + tail;
  }
  const double edge = x0_ + (r > 0 ? R : -R);
  return w0_ + cumulative(r > 0 ? static_cast<int>(R) : -static_cast<int>(R)) + antiderivative(x) -
         antiderivative(edge);
}

double ConfluentTransform::V2(double x) const {
  const WaveEval u = seed(x);
  const double W = w(x);
  const double u2 = std::norm(u.value);
  if (std::abs(W) < 1e-12 * std::max(u2 * (1.0 + std::abs(x)), kTiny)) {
    throw Error(ErrorKind::WZero, "w vanishes at x = " + std::to_string(x));
  }
  const double w1 = u2;
  const double w2 = 2.0 * (u.value * u.deriv).real();
  return inverted_potential(x) - (w2 / W - (w1 / W) * (w1 / W));
}

SingularityReport ConfluentTransform::scan(double span) const {
  SingularityReport rep;
  rep.a = x0_ - span;
  rep.b = x0_ + span;
  double lo = rep.a, hi = rep.b;
  double flo = w(lo);
  const double fhi = w(hi);
  if (flo == 0.0 || fhi == 0.0 || std::signbit(flo) != std::signbit(fhi)) {
    // w is non-decreasing, so a single bisection finds the crossing
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
      const double mid = 0.5 * (lo + hi);
      const double fm = w(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (std::signbit(fm) == std::signbit(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    rep.zeros.push_back({0.5 * (lo + hi), ZeroKind::WZero});
  }
  rep.is_singular = !rep.zeros.empty();
  return rep;
}

double confluent_w(double eps, Combo seed, double w0, double x0, double x) {
  return ConfluentTransform(eps, seed, w0, x0).w(x);
}

// ---------------------------------------------------------------- complex seeds

WaveEval seed_uP(Complex eps, double x) {
  const Complex a = 0.25 + kI * eps / 2.0;
  if (!(eps.imag() > 0.0) || x < 0.0) {
    const Complex k = kappa_P(eps);
    const WaveEval e = psi_even(eps, x), o = psi_odd(eps, x);
    return {e.value - k * o.value, e.deriv - k * o.deriv};
  }
  if (x * x <= seed_switch(0.5 - a, 1.0 - a)) {
    const CDD ad = seed_a(eps);
    return cancel_series(ad, kappa_dd(CDD(Complex(0.5)) - ad, kMinusEighth), x, SeriesControl{});
  }
  // only the e^{z/2} z^{a-1/2} part survives
  const Complex z(0.0, x * x);
  // sqrt(pi) [1/G(a) - kappa e^{-i pi/4} / (2 G(a + 1/2))] = i e^{-i pi a} G(1 - a) / sqrt(pi)
  const Complex pre =
      std::exp(ln_gamma(1.0 - a) - kI * kPi * (a - 0.5) - 0.5 * std::log(kPi) + 0.5 * z + (a - 0.5) * std::log(z));
  const auto s2 = poincare_2f0(0.5 - a, 1.0 - a, 1.0 / z, SeriesControl{}.asymp_terms);
  const Complex dz = pre * ((0.5 + (a - 0.5) / z) * s2.value - s2.dvalue_dt / (z * z));
  return {pre * s2.value, 2.0 * kI * x * dz};
}

WaveEval seed_uN(Complex eps, double x) {
  const Complex a = 0.25 + kI * eps / 2.0;
  if (!(eps.imag() < 0.0) || x < 0.0) {
    const Complex k = kappa_N(eps);
    const WaveEval e = psi_even(eps, x), o = psi_odd(eps, x);
    return {e.value - k * o.value, e.deriv - k * o.deriv};
  }
  if (x * x <= seed_switch(a, a + 0.5)) {
    const CDD ad = seed_a(eps);
    return cancel_series(ad, kappa_dd(ad, kPlusEighth), x, SeriesControl{}, true);
  }
  // only the e^{i pi a} z^{-a} part survives
  const Complex z(0.0, x * x);
  // sqrt(pi) [1/G(1/2 - a) - kappa e^{i pi/4} / (2 G(1 - a))] e^{i pi a} = G(a + 1/2) / sqrt(pi)
  const Complex pre = std::exp(ln_gamma(a + 0.5) - 0.5 * std::log(kPi) - 0.5 * z - a * std::log(z));
  const auto s1 = poincare_2f0(a, a + 0.5, -1.0 / z, SeriesControl{}.asymp_terms);
  const Complex dz = pre * ((-0.5 - a / z) * s1.value + s1.dvalue_dt / (z * z));
  return {pre * s1.value, 2.0 * kI * x * dz};
}

// ---------------------------------------------------------------- complex case

ComplexTransform::ComplexTransform(Complex eps) : energy_(validate_epsilon(eps)) {
  if (!energy_.usable()) {
    throw Error(ErrorKind::Classification,
                "factorization energy (" + std::to_string(eps.real()) + ", " + std::to_string(eps.imag()) +
                    ") is excluded: " + std::string(to_string(energy_.classification)));
  }
}

SusyConstants ComplexTransform::constants() const noexcept {
  const double im = energy_.eps.imag();
  return {-4.0 * im * im, 2.0 * energy_.eps.real()};
}

WaveEval ComplexTransform::seed(double x) const {
  return energy_.classification == EpsClass::QuadrantI_II ? seed_uP(energy_.eps, x) : seed_uN(energy_.eps, x);
}

Jet ComplexTransform::seed_jet(double x, int order) const {
  return sse_jet(seed(x), V0_jet()(x, std::max(order - 2, 0)), energy_.eps, order);
}

double ComplexTransform::w(double x) const {
  const WaveEval u = seed(x);
  return (u.value * std::conj(u.deriv)).imag() / (2.0 * energy_.eps.imag());
}

Jet ComplexTransform::w_jet(double x, int order) const {
  const WaveEval u = seed(x);
  const double w0 = (u.value * std::conj(u.deriv)).imag() / (2.0 * energy_.eps.imag());
  if (order == 0) return Jet(0, w0);
  const Jet uj = sse_jet(u, V0_jet()(x, std::max(order - 3, 0)), energy_.eps, order - 1);
  return (uj * uj.conj()).integral(w0);
}

Jet ComplexTransform::g_jet(double x, int order) const {
  const Jet w = w_jet(x, order + 1);
  const double u2 = w[1].real();
  require_w(x, w[0].real(), u2);
  return w.d() / w.truncated(order);
}

Jet ComplexTransform::h_jet(double x, int order) const {
  const Jet g = g_jet(x, order + 1);
  const Jet gn = g.truncated(order);
  return 0.5 * g.d() + 0.5 * gn * gn - 2.0 * V0_jet()(x, order) + Complex(constants().d);
}

Jet ComplexTransform::V2_jet(double x, int order) const {
  return V0_jet()(x, order) - g_jet(x, order + 1).d();
}

double ComplexTransform::V2_from_log(double x) const { return V2_jet(x, 0)[0].real(); }

void ComplexTransform::require_w(double x, double w, double u2) const {
  if (std::abs(w) < 1e-12 * std::max(u2 * (1.0 + std::abs(x)), kTiny)) {
    throw Error(ErrorKind::WZero, "w vanishes at x = " + std::to_string(x));
  }
}

bool ComplexTransform::w_vanishes(double x) const {
  const WaveEval u = seed(x);
  const double W = (u.value * std::conj(u.deriv)).imag() / (2.0 * energy_.eps.imag());
  return std::abs(W) < 1e-12 * std::max(std::norm(u.value) * (1.0 + std::abs(x)), kTiny);
}

double ComplexTransform::V2(double x) const {
  const WaveEval u = seed(x);
  const double W = (u.value * std::conj(u.deriv)).imag() / (2.0 * energy_.eps.imag());
  const double u2 = std::norm(u.value);
  require_w(x, W, u2);
  const double cross = 2.0 * (std::conj(u.value) * u.deriv).real();
  return inverted_potential(x) - (cross / W - (u2 / W) * (u2 / W));
}

SingularityReport ComplexTransform::scan(double a, double b, int samples) const {
  return singularity_scan([this](double x) { return w(x); }, a, b, samples, ZeroKind::WZero, [this](double x) {
    return std::norm(seed(x).value) * (1.0 + std::abs(x));
  });
}

double complex_w(Complex eps, double x) { return ComplexTransform(eps).w(x); }
double complex_partner(Complex eps, double x) { return ComplexTransform(eps).V2(x); }

}  // namespace invosc
