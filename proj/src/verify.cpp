#include "invosc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>

#include "invosc/algebra.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/ladder.hpp"
#include "invosc/quadrature.hpp"
#include "invosc/specfun.hpp"
#include "invosc/susy.hpp"

namespace invosc {

namespace {

double maxof(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

std::vector<double> logspace(double a, double b, int n) {
  auto t = linspace(std::log(a), std::log(b), n);
  for (double& v : t) v = std::exp(v);
  return t;
}

std::function<Complex(double)> quadratic(Complex omega) {
  return [omega](double x) { return 0.5 * omega * omega * x * x; };
}

std::vector<double> interior(double a, double b, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) xs[i - 1] = a + (b - a) * i / (n + 1.0);
  return xs;
}

Complex random_complex(std::mt19937& rng, double re_lo, double re_hi, double im_lo, double im_hi) {
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(im_lo, im_hi);
  const double r = re(rng);
  return {r, im(rng)};
}

// worst relative SSE residual of f over xs
double sse_worst(const std::function<Complex(double)>& f, Complex omega, Complex E, const std::vector<double>& xs) {
  const auto V = quadratic(omega);
  const auto r = sample([&](double x) { return sse_residual(f, V, E, x).rel(); }, xs);
  return maxof(r);
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Specfun: return "specfun";
    case Suite::Oscillator: return "oscillator";
    case Suite::Ladder: return "ladder";
    case Suite::Susy: return "susy";
    case Suite::Algebra: return "algebra";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view s) noexcept {
  for (Suite v : {Suite::Specfun, Suite::Oscillator, Suite::Ladder, Suite::Susy, Suite::Algebra, Suite::All}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

void apply_tolerance(DiagnosticReport& rep, double tol) {
  for (auto& c : rep.checks) {
    c.tol = tol;
    c.pass = c.max_residual <= tol;
  }
}

DiagnosticReport verify(Suite suite, const VerifyOptions& opt) {
  DiagnosticReport rep;
  switch (suite) {
    case Suite::Specfun: rep = verify_specfun(); break;
    case Suite::Oscillator: rep = verify_oscillator(); break;
    case Suite::Ladder: rep = verify_ladder(); break;
    case Suite::Susy: rep = verify_susy(); break;
    case Suite::Algebra: rep = verify_algebra(); break;
    case Suite::All:
      rep.suite = "all";
      rep.merge(verify_specfun());
      rep.merge(verify_oscillator());
      rep.merge(verify_ladder());
      rep.merge(verify_susy());
      rep.merge(verify_algebra());
      break;
  }
  if (opt.tol) apply_tolerance(rep, *opt.tol);
  return rep;
}

// ---------------------------------------------------------------- studies

double left_right_ratio(double E, int samples, double L) {
  const SolutionSpec s{OscillatorKind::Inverted, E, Combo::of(ComboTag::Left)};
  const auto xs = linspace(-L, L, samples);
  const auto v = sample([&](double x) { return std::abs(psi_combo(s, x).value); }, xs);
  double ml = 0.0, mr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0) ml = std::max(ml, v[i]);
    if (xs[i] >= 0.0) mr = std::max(mr, v[i]);
  }
  return ml / mr;
}

double envelope(const WaveEval& at, double x, double E) {
  const double k2 = std::max(1.0, x * x + 2.0 * E);
  return std::norm(at.value) + std::norm(at.deriv) / k2;
}

double envelope_slope(const std::function<WaveEval(double)>& f, double E, double a, double b, int n) {
  const auto xs = logspace(a, b, n);
  const auto ys = sample([&](double x) { return envelope(f(x), x, E); }, xs);
  return loglog_slope(xs, ys);
}

double seed_slope(Complex eps, double a, double b, int n) {
  const auto xs = logspace(a, b, n);
  const auto ys = sample([&](double x) { return std::norm(seed_uP(eps, x).value); }, xs);
  return loglog_slope(xs, ys);
}

namespace {

// psi_E^{+-} and psi_{E+1}^+ share their parity parts; the three windowed
// integrands look them up here so every node costs four Kummer evaluations.
class ComboCache {
 public:
  explicit ComboCache(double E) : E_(E) {
    const Complex n0 = normalization_NE(E).value;
    const Complex n1 = normalization_NE(E + 1.0).value;
    plus_ = {n0, -n0 * kappa_P(E)};
    minus_ = {n0, n0 * kappa_P(E)};
    next_ = {n1, -n1 * kappa_P(E + 1.0)};
  }

  // {psi_E^+, psi_E^-, psi_{E+1}^+}
  std::array<Complex, 3> at(double x) {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = memo_.find(x);
      if (it != memo_.end()) return it->second;
    }
    const Complex e0 = psi_even(E_, x).value, o0 = psi_odd(E_, x).value;
    const Complex e1 = psi_even(E_ + 1.0, x).value, o1 = psi_odd(E_ + 1.0, x).value;
    const std::array<Complex, 3> v = {plus_[0] * e0 + plus_[1] * o0, minus_[0] * e0 + minus_[1] * o0,
                                      next_[0] * e1 + next_[1] * o1};
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(x, v);
    return v;
  }

 private:
  double E_;
  std::array<Complex, 2> plus_, minus_, next_;
  std::mutex mu_;
  std::unordered_map<double, std::array<Complex, 3>> memo_;
};

}  // namespace

DiracWindow dirac_window_study(double E, const std::vector<double>& Ls) {
  if (!std::is_sorted(Ls.begin(), Ls.end()) || Ls.empty() || !(Ls.front() > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "window half-widths must be positive and increasing");
  }
  DiracWindow d;
  d.L = Ls;
  ComboCache cache(E);
  const auto diag = [&](double x) { return Complex(std::norm(cache.at(x)[0])); };
  const auto off = [&](double x) {
    const auto v = cache.at(x);
    return std::conj(v[0]) * v[2];
  };
  const auto cross = [&](double x) {
    const auto v = cache.at(x);
    return std::conj(v[0]) * v[1];
  };
  // accumulate over the annuli L_{k-1} < |x| < L_k
  Complex sd = 0.0, so = 0.0, sc = 0.0;
  double inner = 0.0;
  std::vector<double> logL;
  for (double L : Ls) {
    const std::array<std::array<double, 2>, 2> pieces =
        inner == 0.0 ? std::array<std::array<double, 2>, 2>{{{-L, 0.0}, {0.0, L}}}
                     : std::array<std::array<double, 2>, 2>{{{-L, -inner}, {inner, L}}};
    for (const auto& [a, b] : pieces) {
      sd += integrate(diag, a, b).value;
      so += integrate(off, a, b).value;
      sc += integrate(cross, a, b).value;
    }
    inner = L;
    d.diagonal.push_back(sd.real());
    d.off_diagonal.push_back(std::abs(so));
    d.cross.push_back(std::abs(sc));
    logL.push_back(std::log(L));
  }
  d.diagonal_vs_logL = linear_fit(logL, d.diagonal);
  return d;
}

// ---------------------------------------------------------------- specfun

DiagnosticReport verify_specfun() {
  DiagnosticReport rep;
  rep.suite = "specfun";
  std::mt19937 rng(20240611);

  // Kummer reflection M(a,b,z) = e^z M(b-a,b,-z)
  {
    std::vector<double> rel;
    std::uniform_real_distribution<double> r(0.0, 30.0), th(-kPi, kPi);
    while (rel.size() < 200) {
      const Complex a = random_complex(rng, -3.0, 3.0, -3.0, 3.0);
      const Complex b = random_complex(rng, 0.2, 4.0, -2.0, 2.0);
      const Complex z = std::polar(r(rng), th(rng));
      const Complex lhs = hyp1f1(a, b, z);
      const Complex rhs = std::exp(z) * hyp1f1(b - a, b, -z);
      rel.push_back(std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
    }
    rep.add("Kummer reflection", maxof(rel), 1e-9, "200 random (a, b, z), |z| <= 30");
  }

  // z w'' + (b - z) w' - a w = 0
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> r(0.0, 45.0), th(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
      const Complex a = random_complex(rng, -3.0, 3.0, -3.0, 3.0);
      const Complex b = random_complex(rng, 0.2, 4.0, -2.0, 2.0);
      // imaginary-axis and general arguments
      const Complex z = i % 2 ? Complex(0.0, r(rng)) : std::polar(0.6 * r(rng), th(rng));
      const Complex w = hyp1f1(a, b, z);
      const Complex w1 = hyp1f1_derivative(a, b, z);
      const Complex w2 = (a / b) * hyp1f1_derivative(a + 1.0, b + 1.0, z);
      const double scale = std::abs(z * w2) + std::abs(b * w1) + std::abs(z * w1) + std::abs(a * w);
      worst = std::max(worst, std::abs(z * w2 + (b - z) * w1 - a * w) / scale);
    }
    rep.add("Kummer ODE residual", worst, 1e-8);
  }

  // ln Gamma(z+1) - ln Gamma(z) - ln z = 0 mod 2 pi i
  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_complex(rng, 0.1, 5.0, -5.0, 5.0);
      Complex d = ln_gamma(z + 1.0) - ln_gamma(z) - std::log(z);
      d.imag(std::remainder(d.imag(), 2.0 * kPi));
      worst = std::max(worst, std::abs(d));
    }
    rep.add("ln Gamma functional equation", worst, 1e-10);
  }

  // series and asymptotic forms agree across the switch
  {
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
      std::uniform_real_distribution<double> E(-3.0, 3.0), r(27.0, 33.0);
      const double e = E(rng);
      const bool odd = i % 2;
      const Complex a = (odd ? 0.75 : 0.25) - kI * e / 2.0;
      const Complex b = odd ? 1.5 : 0.5;
      const Complex z(0.0, (i % 3 == 0 ? -1.0 : 1.0) * r(rng));
      const Complex s = hyp1f1_series(a, b, z), as = hyp1f1_asymptotic(a, b, z);
      worst = std::max(worst, std::abs(s - as) / std::abs(s));
    }
    rep.add("series/asymptotic overlap band", worst, 1e-6, "|z| in [27, 33]");
  }

  // Hermite recurrence against the explicit polynomials, integer z
  {
    const std::array<std::array<double, 7>, 7> coef = {{
        {1, 0, 0, 0, 0, 0, 0},
        {0, 2, 0, 0, 0, 0, 0},
        {-2, 0, 4, 0, 0, 0, 0},
        {0, -12, 0, 8, 0, 0, 0},
        {12, 0, -48, 0, 16, 0, 0},
        {0, 120, 0, -160, 0, 32, 0},
        {-120, 0, 720, 0, -480, 0, 64},
    }};
    bool exact = true;
    for (int n = 0; n <= 6; ++n) {
      for (int z = -5; z <= 5; ++z) {
        double v = 0.0;
        for (int k = 6; k >= 0; --k) v = v * z + coef[n][k];
        if (hermite(n, Complex(z)) != Complex(v)) exact = false;
      }
    }
    rep.add_flag("Hermite recurrence = explicit form", exact, "n <= 6, z in -5..5");
  }

  // extended-precision Gamma ratio against ln Gamma differences
  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Complex t = random_complex(rng, 0.1, 4.0, -8.0, 8.0);
      const Complex ref = std::exp(ln_gamma(t + 0.5) - ln_gamma(t));
      const auto [hi, lo] = gamma_ratio_half_extended(t);
      worst = std::max(worst, std::abs(hi + lo - ref) / std::abs(ref));
    }
    rep.add("Gamma(t+1/2)/Gamma(t)", worst, 1e-11);
  }
  return rep;
}

// ---------------------------------------------------------------- oscillator

DiagnosticReport verify_oscillator() {
  DiagnosticReport rep;
  rep.suite = "oscillator";
  const auto xs = interior(-6.0, 6.0, 50);

  {
    double worst = 0.0;
    for (ComboTag tag : {ComboTag::Left, ComboTag::Right, ComboTag::Plus, ComboTag::Minus}) {
      for (double E : {-2.0, -1.0, 0.0, 1.0}) {
        const SolutionSpec s{OscillatorKind::Inverted, E, Combo::of(tag)};
        worst = std::max(worst, sse_worst([&](double x) { return psi_combo(s, x).value; }, kI, E, xs));
      }
    }
    rep.add("SSE residual (inverted)", worst, 1e-7, "left/right/plus/minus, E in {-2,-1,0,1}, 50 points");
  }
  {
    double worst = 0.0;
    for (auto [kind, E] : {std::pair{OscillatorKind::Harmonic, 0.5}, std::pair{OscillatorKind::Harmonic, 2.3},
                           std::pair{OscillatorKind::Free, 1.7}}) {
      for (Combo c : {Combo::even(), Combo::odd(), Combo::general(0.4, -1.3)}) {
        const SolutionSpec s{kind, E, c};
        worst = std::max(worst, sse_worst([&](double x) { return evaluate(s, x).value; }, omega_of(kind), E, xs));
      }
    }
    rep.add("SSE residual (harmonic, free)", worst, 1e-7);
  }
  {
    double worst = 0.0, parity = 0.0, real = 0.0;
    for (double E : {-2.0, 0.0, 1.5}) {
      const auto grid = linspace(-10.0, 10.0, 81);
      for (double x : grid) {
        const WaveEval e = psi_even(E, x), o = psi_odd(E, x);
        worst = std::max(worst, std::abs(e.value * o.deriv - e.deriv * o.value - 1.0));
        const WaveEval em = psi_even(E, -x), om = psi_odd(E, -x);
        parity = std::max({parity, std::abs(em.value - e.value), std::abs(om.value + o.value)});
        for (ComboTag tag : {ComboTag::Left, ComboTag::Right}) {
          const Complex v = psi_combo(SolutionSpec{OscillatorKind::Inverted, E, Combo::of(tag)}, x).value;
          real = std::max(real, std::abs(v.imag()) / (1.0 + std::abs(v)));
        }
      }
    }
    rep.add("Wronskian W(psi_e, psi_o) = 1", worst, 1e-9);
    rep.add("parity", parity, 0.0);
    rep.add("realness of left/right", real, 1e-10);
  }
  {
    // W(psi+, psi-) constant and nonzero
    double spread = 0.0, smallest = 1e300;  // |W| relative to its two products
    for (double E : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
      const SolutionSpec p{OscillatorKind::Inverted, E, Combo::of(ComboTag::Plus)};
      const SolutionSpec m{OscillatorKind::Inverted, E, Combo::of(ComboTag::Minus)};
      Complex W0 = 0.0;
      for (double x : {-7.0, -1.0, 0.0, 2.5, 9.0}) {
        const WaveEval a = psi_combo(p, x), b = psi_combo(m, x);
        const Complex W = a.value * b.deriv - a.deriv * b.value;
        if (x == -7.0) W0 = W;
        spread = std::max(spread, std::abs(W - W0) / std::abs(W0));
        smallest = std::min(smallest, std::abs(W) / (std::abs(a.value * b.deriv) + std::abs(a.deriv * b.value)));
      }
    }
    rep.add("W(psi+, psi-) constant", spread, 1e-9);
    rep.add_flag("W(psi+, psi-) != 0", smallest > 1e-6, "min relative |W| = " + std::to_string(smallest));
  }
  rep.add("psi_L(E=-2) left/right ratio", std::abs(left_right_ratio(-2.0) / kLeftRightRatio - 1.0), 0.02);
  {
    const Complex ip = integral_representation_check(Sigma::Plus, 0.0, 1.0, 60.0);
    const Complex pv = psi_combo(SolutionSpec{OscillatorKind::Inverted, 0.0, Combo::of(ComboTag::Plus)}, 1.0).value;
    rep.add("integral representation (P = 60)", std::abs(ip - pv) / std::abs(pv), 5e-3);
  }
  {
    const DiracWindow d = dirac_window_study(0.0);
    rep.add("window diagonal ~ log L (1 - R^2)", 1.0 - d.diagonal_vs_logL.r2, 0.01);
    rep.add_flag("window diagonal grows", d.diagonal_vs_logL.slope > 0.0);
    double off = 0.0, cross = 0.0;
    for (std::size_t i = 1; i < d.L.size(); ++i) {
      off = std::max(off, d.off_diagonal[i] / d.off_diagonal[0]);
      cross = std::max(cross, d.cross[i] / d.cross[0]);
    }
    rep.add("window off-diagonal / L=20 value", off, 1.5);
    rep.add("window cross-sigma / L=20 value", cross, 1.5);
  }
  return rep;
}

// ---------------------------------------------------------------- ladder

DiagnosticReport verify_ladder() {
  DiagnosticReport rep;
  rep.suite = "ladder";
  DiagnosticReport one = algebra_residuals(1.0, 3);
  one.suite = "omega=1";
  DiagnosticReport eye = algebra_residuals(kI, 3);
  eye.suite = "omega=i";
  rep.merge(one);
  rep.merge(eye);

  {
    // a_i^{+-} antihermitian on damped functions
    const Wave f = damped_polynomial({0.3, -0.2, 0.5, 0.1, -0.4});
    const Wave g = damped_polynomial({-0.7, 0.4, 0.2, -0.3, 0.25});
    QuadOptions q;
    q.rel_tol = 1e-11;
    q.abs_tol = 1e-14;
    double worst = 0.0;
    for (int s : {+1, -1}) {
      const auto af = [&](double x) { return apply_a(kI, s, f.jet(x, 1), x)[0]; };
      const auto ag = [&](double x) { return apply_a(kI, s, g.jet(x, 1), x)[0]; };
      const Complex l = integrate([&](double x) { return std::conj(af(x)) * g.value(x); }, -14.0, 14.0, q).value;
      const Complex r = integrate([&](double x) { return std::conj(f.value(x)) * ag(x); }, -14.0, 14.0, q).value;
      worst = std::max(worst, std::abs(l + r) / (std::abs(l) + std::abs(r)));
    }
    rep.add("<a_i f, g> = -<f, a_i g>", worst, 1e-9);
  }
  {
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m) {
      for (int n = m; n <= 6; ++n) {
        const auto f = [m](double x) { return ladder_state(LadderFamily::BoundHarmonic, m, x).value; };
        const auto g = [n](double x) { return ladder_state(LadderFamily::BoundHarmonic, n, x).value; };
        const Complex ip = window_inner_product(f, g, 12.0);
        worst = std::max(worst, std::abs(ip - (m == n ? 1.0 : 0.0)));
      }
    }
    rep.add("bound states orthonormal (L = 12)", worst, 1e-8);
  }
  {
    double worst = 0.0, shift = 0.0;
    bool lattice = true;
    const auto xs = interior(-4.0, 4.0, 50);
    for (LadderFamily fam : {LadderFamily::BoundHarmonic, LadderFamily::NonphysHarmonic, LadderFamily::InvertedMinus,
                             LadderFamily::InvertedPlus}) {
      const Complex omega = omega_of(kind_of(fam));
      for (int n = 0; n <= 6; ++n) {
        const LadderState st = make_ladder_state(fam, n);
        const double h = n + 0.5;
        const Complex want = fam == LadderFamily::BoundHarmonic     ? Complex(h)
                             : fam == LadderFamily::NonphysHarmonic ? Complex(-h)
                             : fam == LadderFamily::InvertedMinus   ? Complex(0.0, h)
                                                                    : Complex(0.0, -h);
        if (st.eigenvalue != want) lattice = false;
        worst = std::max(worst, sse_worst([&](double x) { return ladder_state(fam, n, x).value; }, omega,
                                          st.eigenvalue, xs));
        for (int s : {+1, -1}) {
          const Wave moved = ladder_apply(omega, s, ladder_wave(fam, n));
          shift = std::max(shift, sse_worst([&](double x) { return moved.value(x); }, omega, *moved.energy(), xs));
        }
      }
    }
    rep.add("ladder states SSE residual", worst, 1e-7);
    rep.add("a^{+-} psi solves the SSE at E +- omega", shift, 1e-7);
    rep.add_flag("eigenvalue lattice", lattice);
  }
  {
    // a+ psi_n = sqrt(n+1) psi_{n+1} for the bound ladder
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
      const Wave up = ladder_apply(1.0, +1, ladder_wave(LadderFamily::BoundHarmonic, n));
      for (double x : linspace(-4.0, 4.0, 33)) {
        worst = std::max(worst, std::abs(up.value(x) - std::sqrt(n + 1.0) *
                                                           ladder_state(LadderFamily::BoundHarmonic, n + 1, x).value));
      }
    }
    rep.add("a+ psi_n = sqrt(n+1) psi_{n+1}", worst, 1e-12);
  }
  return rep;
}

// ---------------------------------------------------------------- susy

DiagnosticReport verify_susy() {
  DiagnosticReport rep;
  rep.suite = "susy";

  {
    bool ok = validate_epsilon({2.0, 0.0}).classification == EpsClass::ExcludedRealAxis &&
              validate_epsilon({0.0, 0.5}).classification == EpsClass::ExcludedLatticePoint &&
              validate_epsilon({0.0, -2.5}).classification == EpsClass::ExcludedLatticePoint &&
              validate_epsilon({1e-5, 5.0}).classification == EpsClass::QuadrantI_II &&
              validate_epsilon({0.2, -0.2}).classification == EpsClass::QuadrantIII_IV;
    rep.add_flag("eps classification", ok);
  }
  {
    double worst = 0.0;
    for (Complex e : {Complex(5.0, 1.0), Complex(1e-5, 5.0), Complex(0.2, 0.2), Complex(-1.0, 2.0)}) {
      for (double x : linspace(-12.0, 25.0, 75)) {
        const WaveEval p = seed_uP(e, x), n = seed_uN(std::conj(e), x);
        worst = std::max(worst, std::abs(std::conj(p.value) - n.value) / std::abs(p.value));
      }
    }
    rep.add("conj u_P(eps) = u_N(conj eps)", worst, 1e-10);
  }
  {
    double worst = 0.0;
    const auto xs = interior(-10.0, 20.0, 60);
    for (Complex e : {Complex(5.0, 1.0), Complex(1e-5, 5.0), Complex(0.2, 0.2), Complex(1e-2, 1.0)}) {
      worst = std::max(worst, sse_worst([&](double x) { return seed_uP(e, x).value; }, kI, e, xs));
    }
    rep.add("u_P SSE residual", worst, 1e-7);
  }
  rep.add("|u_P(5+i)|^2 slope on [6, 30] vs -3", std::abs(seed_slope({5.0, 1.0}, 6.0, 30.0) + 3.0), 0.15);

  const std::array<Complex, 3> regular_eps = {Complex(1e-5, 5.0), Complex(0.2, 0.2), Complex(1e-2, 1.0)};
  {
    int singular = 0;
    double imag = 0.0, log_form = 0.0;
    for (Complex e : regular_eps) {
      const ComplexTransform T(e);
      if (T.scan(-10.0, 10.0, 4000).is_singular) ++singular;
      const auto xs = linspace(-10.0, 10.0, 201);
      const auto r = sample(
          [&](double x) {
            const Jet v = T.V2_jet(x, 0);
            const double V2 = T.V2(x);
            return std::pair{std::abs(v[0].imag()) / std::abs(V2), std::abs(v[0].real() - V2) / (1.0 + std::abs(V2))};
          },
          xs);
      for (const auto& [a, b] : r) {
        imag = std::max(imag, a);
        log_form = std::max(log_form, b);
      }
    }
    rep.add_flag("V2 nonsingular on [-10, 10]", singular == 0, "eps in {1e-5+5i, (1+i)/5, 1e-2+i}");
    rep.add("Im V2 / |V2|", imag, 1e-9);
    rep.add("V2 = V0 - (log w)''", log_form, 1e-9);
    const ComplexTransform T(regular_eps[0]);
    rep.add("|V2 + x^2/2| at |x| = 25", std::max(std::abs(T.V2(25.0) + 312.5), std::abs(T.V2(-25.0) + 312.5)), 0.05);
  }
  {
    // g' + g^2 - 2 (u'/u) g - 2 xi = 0 and the g master equation
    double ans = 0.0, eqg = 0.0;
    for (Complex e : regular_eps) {
      const ComplexTransform T(e);
      const SusyConstants k = T.constants();
      const Complex xi = e - std::conj(e);
      const auto xs = linspace(-8.0, 8.0, 161);
      const auto r = sample(
          [&](double x) {
            const Jet g = T.g_jet(x, 1);
            const WaveEval u = T.seed(x);
            const Complex gam = u.deriv / u.value;
            const Complex a = g[1] + g[0] * g[0] - 2.0 * gam * g[0] - 2.0 * xi;
            const double sa = std::abs(g[1]) + std::norm(g[0]) + std::abs(2.0 * gam * g[0]) + std::abs(2.0 * xi);
            const auto gf = [&](double t) {
              const WaveEval v = T.seed(t);
              return Complex(std::norm(v.value) / T.w(t));
            };
            const double h = fd_step(x);
            const double G = gf(x).real(), G1 = fd_first(gf, x, h).real(), G2 = fd_second(gf, x, h).real();
            const double V0 = inverted_potential(x);
            const std::array<double, 4> terms = {G * G2 / 2.0, -G1 * G1 / 4.0, G * G * (G1 + G * G / 4.0 - 2.0 * V0 + k.d),
                                                 k.c};
            double sum = 0.0, scale = 0.0;
            for (double t : terms) {
              sum += t;
              scale += std::abs(t);
            }
            return std::pair{std::abs(a) / sa, std::abs(sum) / scale};
          },
          xs);
      for (const auto& [a, b] : r) {
        ans = std::max(ans, a);
        eqg = std::max(eqg, b);
      }
    }
    rep.add("ansatz g' + g^2 - 2 gamma g - 2 xi", ans, 1e-7);
    rep.add("eqg residual", eqg, 1e-6, "g master equation, finite differences on [-8, 8]");
  }
  {
    // H2 B+ = B+ H0 on x^k e^{-x^2/4}
    double worst = 0.0;
    for (Complex e : regular_eps) {
      const ComplexTransform T(e);
      for (int k = 0; k <= 4; ++k) {
        std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
        c[k] = 1.0;
        const Wave f = damped_polynomial(c);
        const auto V0 = quadratic_potential(kI);
        double num = 0.0, den = 0.0;
        for (double x : linspace(-6.0, 6.0, 49)) {
          const Jet fj = f.jet(x, 4);
          const Complex l = apply_H2(T, apply_Bplus(T, fj, x), x)[0];
          const Complex r = apply_Bplus(T, apply_H(fj, V0(x, 2)), x)[0];
          num = std::max(num, std::abs(l - r));
          den = std::max(den, std::abs(r));
        }
        worst = std::max(worst, num / den);
      }
    }
    rep.add("h consistency: H2 B+ = B+ H0", worst, 1e-6);
  }
  {
    const auto R = RealCaseTransform::inverted(0.0, Combo::even(), 1.0, Combo::even());
    const ConfluentTransform C(0.0, Combo::even());
    const ComplexTransform X(regular_eps[0]);
    rep.add_flag("case constants: c > 0 real, c = 0 confluent, c < 0 complex",
                 R.constants().c > 0 && C.constants().c == 0.0 && X.constants().c < 0);
  }
  {
    // negative results
    int clean = 0;
    for (double e : {-1.0, 0.0, 1.0}) {
      for (auto [C, D] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{1.0, 1.0}}) {
        const SolutionSpec s{OscillatorKind::Inverted, e, Combo::general(C, D)};
        const auto rep1 = singularity_scan([&](double x) { return evaluate(s, x).value.real(); }, -10.0, 10.0, 4000,
                                           ZeroKind::SeedZero, [&](double x) {
                                             const WaveEval u = evaluate(s, x);
                                             return std::abs(u.value) + std::abs(u.deriv) / std::max(1.0, std::abs(x));
                                           });
        if (!rep1.is_singular) ++clean;
      }
    }
    rep.add_flag("first-order seeds all vanish in [-10, 10]", clean == 0);
    const auto R = RealCaseTransform::inverted(0.0, Combo::even(), 1.0, Combo::even());
    rep.add_flag("real-case Wronskian (0, 1) vanishes in [-10, 10]", R.scan(-10.0, 10.0, 4000).is_singular);
    int confluent_clean = 0;
    for (int w0 = -5; w0 <= 5; ++w0) {
      if (!ConfluentTransform(0.0, Combo::even(), w0).scan().is_singular) ++confluent_clean;
    }
    rep.add_flag("confluent w vanishes for w0 in -5..5", confluent_clean == 0);
  }
  return rep;
}

// ---------------------------------------------------------------- algebra

DiagnosticReport verify_algebra() {
  DiagnosticReport rep = algebra_identities();
  const Complex eps(1e-5, 5.0);
  const ComplexTransform T(eps);
  {
    // isospectrality: psi2 solves the H2 equation on an energy grid
    double worst = 0.0;
    const auto xs = interior(-6.0, 6.0, 30);
    for (int i = 0; i <= 12; ++i) {
      const double E = -3.0 + 0.5 * i;
      const Wave f = transformed_wave(PartnerEigenfunction{eps, E, ComboTag::Left, Normalization::BFactor});
      const auto V2 = [&](double x) { return Complex(T.V2(x)); };
      const auto r = sample([&](double x) { return sse_residual([&](double t) { return f.value(t); }, V2, E, x).rel(); },
                            xs);
      worst = std::max(worst, maxof(r));
    }
    rep.add("psi2 solves H2 at E in [-3, 3]", worst, 1e-6);
  }
  {
    std::vector<double> energies = linspace(-3.0, 3.0, 20);
    const auto ratios = shooting_tail_ratios(T, energies);
    const double lowest = *std::min_element(ratios.begin(), ratios.end());
    rep.add_flag("no normalizable shots (tail ratio > 0.5)", lowest > 0.5, "min ratio " + std::to_string(lowest));
  }
  rep.add("|V2 - V0| at |x| = 40", std::max(std::abs(T.V2(40.0) + 800.0), std::abs(T.V2(-40.0) + 800.0)), 0.02);
  {
    // psi2 keeps the x^{-1/2} envelope of psi
    double worst = 0.0;
    for (double E : {-2.0, -1.0, 0.0, 1.0}) {
      const PartnerEigenfunction p{eps, E, ComboTag::Left, Normalization::BFactor};
      const Wave f = transformed_wave(p), psi = base_eigenfunction(p);
      const double s2 = envelope_slope([&](double x) { return f.eval(x); }, E, 10.0, 40.0);
      const double s0 = envelope_slope([&](double x) { return psi.eval(x); }, E, 10.0, 40.0);
      worst = std::max(worst, std::abs(s2 - s0));
    }
    rep.add("psi2 and psi envelope slopes on [10, 40]", worst, 0.02);
  }
  return rep;
}

}  // namespace invosc
