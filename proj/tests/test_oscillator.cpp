#include <doctest.h>

#include "helpers.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/oscillator.hpp"
#include "invosc/verify.hpp"
#include "oracle/mpmath_values.hpp"
#include "oracle/ode.hpp"

using namespace invosc;
using testing::rel;

namespace {

SolutionSpec inverted(double E, ComboTag t) { return {OscillatorKind::Inverted, E, Combo::of(t)}; }

}  // namespace

TEST_SUITE("oscillator") {
  TEST_CASE("parity solutions against mpmath") {
    for (const auto& p : oracle::mpm::kParity) {
      CAPTURE(p.E);
      CAPTURE(p.x);
      CHECK(rel(psi_even(p.E, p.x).value, p.even) < 1e-11);
      CHECK(rel(psi_odd(p.E, p.x).value, p.odd) < 1e-11);
    }
  }

  TEST_CASE("kappa_P and N_E against mpmath") {
    for (const auto& c : oracle::mpm::kConstants) {
      CAPTURE(c.E);
      CHECK(rel(kappa_P(c.E), c.kappaP) < 1e-13);
      CHECK(rel(normalization_NE(c.E).value, c.NE) < 1e-12);
    }
  }

  TEST_CASE("closed forms follow an ODE integration from the origin") {
    for (Complex omega : {kI, Complex(1.0)}) {
      for (Complex E : {Complex(-2.0), Complex(0.0), Complex(1.3), Complex(0.3, 0.7)}) {
        const auto V = [omega](double x) { return 0.5 * omega * omega * x * x; };
        for (double x1 : {-4.5, 2.0, 6.0}) {
          const auto e = oracle::shoot(V, E, 0.0, {1.0, 0.0}, x1);
          const auto o = oracle::shoot(V, E, 0.0, {0.0, 1.0}, x1);
          const WaveEval pe = parity_even(omega, E, x1), po = parity_odd(omega, E, x1);
          CHECK(rel(pe.value, e[0]) < 1e-8);
          CHECK(rel(pe.deriv, e[1]) < 1e-8);
          CHECK(rel(po.value, o[0]) < 1e-8);
          CHECK(rel(po.deriv, o[1]) < 1e-8);
        }
      }
    }
  }

  TEST_CASE("Wronskian and parity") {
    for (double E : {-3.0, 0.0, 2.0}) {
      for (double x : linspace(-12.0, 12.0, 49)) {
        const WaveEval e = psi_even(E, x), o = psi_odd(E, x);
        CHECK(std::abs(e.value * o.deriv - e.deriv * o.value - 1.0) < 1e-9);
        CHECK(psi_even(E, -x).value == e.value);
        CHECK(psi_odd(E, -x).value == -o.value);
      }
    }
  }

  TEST_CASE("left and right movers are real mirror images") {
    for (double E : {-2.0, 0.5}) {
      for (double x : {-8.0, -1.0, 0.0, 3.0, 11.0}) {
        const Complex l = psi_combo(inverted(E, ComboTag::Left), x).value;
        const Complex r = psi_combo(inverted(E, ComboTag::Right), -x).value;
        CHECK(std::abs(l.imag()) < 1e-10 * (1.0 + std::abs(l)));
        CHECK(rel(l, r) < 1e-12);
      }
    }
  }

  TEST_CASE("psi_+ is outgoing on the right") {
    // psi' ~ i x psi for x -> +inf
    const auto s = inverted(0.7, ComboTag::Plus);
    for (double x : {30.0, 60.0}) {
      const WaveEval w = psi_combo(s, x);
      CHECK(std::abs(w.deriv / (kI * x * w.value) - 1.0) < 2.0 / (x * x));
    }
  }

  TEST_CASE("large-x asymptotics") {
    for (double E : {-1.0, 0.0, 2.0}) {
      // first neglected term ~ 2 |a| |a - b + 1| / x^2, measured against the envelope
      const double c = 2.0 * (1.0 + E * E);
      for (double x : {20.0, 40.0}) {
        const WaveEval e = psi_even(E, x), o = psi_odd(E, x);
        CHECK(std::abs(asymptotic_even(E, x) - e.value) < c / (x * x) * std::hypot(std::abs(e.value), std::abs(e.deriv) / x));
        CHECK(std::abs(asymptotic_odd(E, x) - o.value) < c / (x * x) * std::hypot(std::abs(o.value), std::abs(o.deriv) / x));
      }
    }
    CHECK(rel(asymptotic_even(1.0, 15.0), psi_even(1.0, 15.0).value) < 0.02);
    CHECK_THROWS_AS(asymptotic_even(0.0, 1.0), Error);
  }

  TEST_CASE("harmonic and free special cases") {
    const SolutionSpec ground{OscillatorKind::Harmonic, 0.5, Combo::even()};
    for (double x : {0.0, 0.7, -2.0}) CHECK(rel(evaluate(ground, x).value, std::exp(-0.5 * x * x)) < 1e-14);
    const SolutionSpec free{OscillatorKind::Free, 2.0, Combo::general(1.0, 2.0)};
    CHECK(rel(evaluate(free, 0.4).value, std::cos(0.8) + std::sin(0.8)) < 1e-14);
    CHECK(rel(free_plane_wave(1, 2.0, 0.4).value, std::exp(Complex(0.0, 0.8))) < 1e-14);
  }

  TEST_CASE("SSE residual of every combination") {
    for (ComboTag t : {ComboTag::Left, ComboTag::Right, ComboTag::Plus, ComboTag::Minus}) {
      for (double E : {-2.0, -1.0, 0.0, 1.0}) {
        const Wave w = Wave::sampled([&](double x) { return psi_combo(inverted(E, t), x); });
        const auto V = [](double x) { return Complex(-0.5 * x * x); };
        for (double x : linspace(-5.9, 5.9, 25)) {
          CHECK(sse_residual([&](double y) { return w.value(y); }, V, E, x).rel() < 1e-7);
        }
      }
    }
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(psi_combo(SolutionSpec{OscillatorKind::Harmonic, 1.0, Combo::of(ComboTag::Plus)}, 0.0), Error);
    CHECK_THROWS_AS(general_solution(SolutionSpec{OscillatorKind::Free, 1.0, Combo::even()}, 0.0), Error);
    CHECK_THROWS_AS(evaluate(SolutionSpec{OscillatorKind::Inverted, NAN, Combo::even()}, 0.0), Error);
    CHECK(parse_combo("left") == ComboTag::Left);
    CHECK_FALSE(parse_combo("sideways"));
    CHECK(parse_oscillator_kind("inverted") == OscillatorKind::Inverted);
    CHECK_THROWS_AS(window_inner_product([](double) { return Complex(1); }, [](double) { return Complex(1); }, 0.0),
                    Error);
  }

  TEST_CASE("Mellin basis") {
    CHECK(mellin_basis(Sigma::Plus, 0.3, -2.0) == Complex(0.0));
    CHECK(mellin_basis(Sigma::Minus, 0.3, 2.0) == Complex(0.0));
    CHECK(rel(mellin_basis(Sigma::Plus, 0.0, 4.0), 0.5 / std::sqrt(2.0 * kPi)) < 1e-15);
    CHECK_THROWS_AS(mellin_basis(Sigma::Plus, 0.0, 0.0), Error);
    // disjoint supports
    const auto f = [](double x) { return x == 0.0 ? Complex(0.0) : mellin_basis(Sigma::Plus, 0.0, x); };
    const auto g = [](double x) { return x == 0.0 ? Complex(0.0) : mellin_basis(Sigma::Minus, 0.0, x); };
    CHECK(window_inner_product(f, g, 10.0) == Complex(0.0));
  }

  TEST_CASE("windowed Dirac normalization: growth and boundedness") {
    const DiracWindow d = dirac_window_study(-1.0, {20.0, 40.0, 80.0, 160.0});
    // diagonal grows by ln(2)/pi per doubling
    CHECK(d.diagonal_vs_logL.r2 > 0.999);
    CHECK(std::abs(d.diagonal_vs_logL.slope - 1.0 / kPi) < 0.01);
    const double early = std::max({d.off_diagonal[0], d.off_diagonal[1], d.off_diagonal[2]});
    CHECK(d.off_diagonal[3] < 1.5 * early);
    for (double c : d.cross) CHECK(std::abs(c - d.cross[0]) < 0.1 * d.cross[0]);
  }
}
