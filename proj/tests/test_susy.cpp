#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/susy.hpp"
#include "oracle/mpmath_values.hpp"
#include "oracle/ode.hpp"

using namespace invosc;
using testing::rel;

namespace {

const Complex kRegularEps[] = {Complex(1e-5, 5.0), Complex(0.2, 0.2), Complex(1e-2, 1.0)};

}  // namespace

TEST_SUITE("susy") {
  TEST_CASE("factorization energy classes") {
    CHECK(validate_epsilon(2.0).classification == EpsClass::ExcludedRealAxis);
    CHECK(validate_epsilon(Complex(-1.0, 1e-12)).classification == EpsClass::ExcludedRealAxis);
    CHECK(validate_epsilon(Complex(0.0, 0.5)).classification == EpsClass::ExcludedLatticePoint);
    CHECK(validate_epsilon(Complex(0.0, -3.5)).classification == EpsClass::ExcludedLatticePoint);
    CHECK(validate_epsilon(Complex(1e-5, 5.0)).classification == EpsClass::QuadrantI_II);
    CHECK(validate_epsilon(Complex(-0.3, -0.2)).classification == EpsClass::QuadrantIII_IV);
    // near but not on the lattice
    CHECK(validate_epsilon(Complex(1e-6, 0.5)).usable());
    CHECK_THROWS_AS(ComplexTransform(Complex(0.0, 1.5)), Error);
  }

  TEST_CASE("seeds against mpmath") {
    for (const auto& s : oracle::mpm::kSeeds) {
      CAPTURE(s.eps);
      CAPTURE(s.x);
      CHECK(rel(seed_uP(s.eps, s.x).value, s.uP) < 1e-10);
      CHECK(rel(seed_uN(std::conj(s.eps), s.x).value, s.uN_conj) < 1e-10);
    }
  }

  TEST_CASE("conj u_P(eps) = u_N(conj eps)") {
    std::mt19937 g(31);
    std::uniform_real_distribution<double> X(-12.0, 30.0);
    for (int i = 0; i < 200; ++i) {
      const Complex e = testing::rand_c(g, -6.0, 6.0, 0.05, 6.0);
      if (!validate_epsilon(e).usable()) continue;
      const double x = X(g);
      const WaveEval p = seed_uP(e, x), n = seed_uN(std::conj(e), x);
      CHECK(rel(std::conj(p.value), n.value) < 1e-10);
      CHECK(rel(std::conj(p.deriv), n.deriv) < 1e-10);
    }
  }

  TEST_CASE("u_P solves the SSE at complex eps (ODE shooting)") {
    const auto V = [](double x) { return Complex(-0.5 * x * x); };
    for (Complex e : {Complex(5.0, 1.0), Complex(1e-5, 5.0), Complex(-1.0, 2.0)}) {
      // integrate towards smaller x, where u_P is the dominant solution
      for (auto [x0, x1] : {std::pair{6.0, 0.5}, std::pair{2.0, -3.0}, std::pair{14.0, 8.0}}) {
        CAPTURE(e);
        CAPTURE(x0);
        const WaveEval a = seed_uP(e, x0), b = seed_uP(e, x1);
        const auto y = oracle::shoot(V, e, x0, {a.value, a.deriv}, x1);
        CHECK(rel(y[0], b.value) < 1e-7);
      }
    }
  }

  TEST_CASE("u_P decays as x^{-(1 + 2 Im eps)/2}") {
    const Complex e(5.0, 1.0);
    const double r = std::norm(seed_uP(e, 60.0).value) / std::norm(seed_uP(e, 30.0).value);
    CHECK(std::abs(std::log(r) / std::log(2.0) + 3.0) < 0.03);
  }

  TEST_CASE("w' = |u|^2 and the two V2 forms agree") {
    for (Complex e : kRegularEps) {
      const ComplexTransform T(e);
      for (double x : {-7.0, -1.0, 0.0, 2.5, 9.0}) {
        const double h = 1e-4;
        const double dw = (T.w(x + h) - T.w(x - h)) / (2.0 * h);
        CHECK(std::abs(dw - std::norm(T.seed(x).value)) < 1e-6 * std::norm(T.seed(x).value) + 1e-12);
        CHECK(std::abs(T.V2(x) - T.V2_from_log(x)) < 1e-8 * (1.0 + std::abs(T.V2(x))));
        CHECK(std::abs(T.V2_jet(x, 0)[0].imag()) < 1e-9 * (1.0 + std::abs(T.V2(x))));
      }
    }
  }

  TEST_CASE("partner potentials of the complex case are regular") {
    for (Complex e : kRegularEps) {
      CAPTURE(e);
      CHECK_FALSE(ComplexTransform(e).scan(-10.0, 10.0, 4000).is_singular);
    }
    const ComplexTransform T(kRegularEps[0]);
    CHECK(std::abs(T.V2(25.0) + 312.5) < 0.05);
    CHECK(std::abs(T.V2(-25.0) + 312.5) < 0.05);
  }

  TEST_CASE("singularity scan finds sign changes and touching zeros") {
    const auto r = singularity_scan([](double x) { return std::sin(x); }, -10.0, 10.0, 500);
    REQUIRE(r.zeros.size() == 7);
    for (const auto& z : r.zeros) CHECK(std::abs(std::sin(z.location)) < 1e-9);
    const auto t = singularity_scan([](double x) { return (x - 1.0) * (x - 1.0); }, -3.0, 3.0, 601);
    CHECK(t.is_singular);
    CHECK_FALSE(singularity_scan([](double x) { return 2.0 + std::cos(x); }, -10.0, 10.0, 400).is_singular);
  }

  TEST_CASE("first-order seeds vanish somewhere in [-10, 10]") {
    for (double e : {-1.0, 0.0, 1.0}) {
      for (auto [C, D] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{1.0, 1.0}}) {
        const SolutionSpec s{OscillatorKind::Inverted, e, Combo::general(C, D)};
        const auto r = singularity_scan([&](double x) { return evaluate(s, x).value.real(); }, -10.0, 10.0, 4000);
        CHECK(r.is_singular);
        // the partner potential is undefined at that zero
        CHECK_THROWS_AS(first_order_partner(e, C, D, r.zeros.front().location), Error);
      }
    }
  }

  TEST_CASE("superpotential solves the Riccati equation") {
    const double e = 0.3;
    const double x = 0.2;
    const Wave u = solution_wave(SolutionSpec{OscillatorKind::Inverted, e, Combo::even()});
    const Complex a = superpotential(u, x);
    const double h = 1e-5;
    const Complex dnum = (superpotential(u, x + h) - superpotential(u, x - h)) / (2.0 * h);
    CHECK(std::abs(dnum + a * a - 2.0 * (-0.5 * x * x - e)) < 1e-7);
  }

  TEST_CASE("real and confluent cases") {
    const auto R = RealCaseTransform::inverted(0.0, Combo::even(), 1.0, Combo::even());
    CHECK(R.constants().c > 0.0);
    CHECK(R.scan(-10.0, 10.0, 4000).is_singular);
    const auto W = R.wronskian(0.7);
    const double h = 1e-5;
    const Complex dW = (R.wronskian(0.7 + h)[0] - R.wronskian(0.7 - h)[0]) / (2.0 * h);
    CHECK(std::abs(dW - W[1]) < 1e-7 * (1.0 + std::abs(W[1])));

    const ConfluentTransform C(0.0, Combo::even(), 0.5);
    CHECK(C.constants().c == 0.0);
    for (double x : {0.5, 3.0, 29.0, 31.0, 45.0, -35.0}) {
      const double dw = (C.w(x + 1e-4) - C.w(x - 1e-4)) / 2e-4;
      CHECK(std::abs(dw - std::norm(C.seed(x).value)) < 1e-5 * (1.0 + std::norm(C.seed(x).value)));
    }
    // near and far forms meet at the edge
    const double R0 = ConfluentTransform::near_range();
    CHECK(std::abs(C.w(R0 - 1e-9) - C.w(R0 + 1e-9)) < 1e-6);
    for (int w0 = -5; w0 <= 5; ++w0) CHECK(ConfluentTransform(0.0, Combo::even(), w0).scan().is_singular);
  }
}
