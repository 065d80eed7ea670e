#include <doctest.h>

#include <boost/math/special_functions/hermite.hpp>

#include "helpers.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/ladder.hpp"
#include "oracle/ode.hpp"

using namespace invosc;
using testing::rel;

namespace {

const LadderFamily kFamilies[] = {LadderFamily::BoundHarmonic, LadderFamily::NonphysHarmonic,
                                  LadderFamily::InvertedMinus, LadderFamily::InvertedPlus};

}  // namespace

TEST_SUITE("ladder") {
  TEST_CASE("bound states are the normalized Hermite functions") {
    for (int n = 0; n <= 8; ++n) {
      const double c = 1.0 / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(kPi));
      for (double x : {-3.0, -0.4, 0.0, 1.1, 4.0}) {
        const double want = c * boost::math::hermite(static_cast<unsigned>(n), x) * std::exp(-0.5 * x * x);
        CHECK(std::abs(ladder_state(LadderFamily::BoundHarmonic, n, x).value - want) < 1e-14);
      }
    }
  }

  TEST_CASE("every family member solves its SSE (ODE shooting)") {
    for (LadderFamily f : kFamilies) {
      const Complex omega = omega_of(kind_of(f));
      const auto V = [omega](double x) { return 0.5 * omega * omega * x * x; };
      for (int n : {0, 1, 4}) {
        const LadderState st = make_ladder_state(f, n);
        const WaveEval a = ladder_state(f, n, -1.0), b = ladder_state(f, n, 2.5);
        const auto y = oracle::shoot(V, st.eigenvalue, -1.0, {a.value, a.deriv}, 2.5);
        const double scale = std::abs(b.value) + std::abs(b.deriv);
        CHECK(std::abs(y[0] - b.value) < 1e-8 * scale);
        CHECK(std::abs(y[1] - b.deriv) < 1e-8 * scale);
      }
    }
  }

  TEST_CASE("eigenvalue lattice") {
    CHECK(make_ladder_state(LadderFamily::BoundHarmonic, 3).eigenvalue == Complex(3.5));
    CHECK(make_ladder_state(LadderFamily::NonphysHarmonic, 0).eigenvalue == Complex(-0.5));
    CHECK(make_ladder_state(LadderFamily::InvertedMinus, 2).eigenvalue == Complex(0.0, 2.5));
    CHECK(make_ladder_state(LadderFamily::InvertedPlus, 1).eigenvalue == Complex(0.0, -1.5));
    CHECK_THROWS_AS(make_ladder_state(LadderFamily::BoundHarmonic, -1), Error);
  }

  TEST_CASE("raising and lowering") {
    for (int n = 0; n <= 5; ++n) {
      const Wave up = ladder_apply(1.0, +1, ladder_wave(LadderFamily::BoundHarmonic, n));
      const Wave down = ladder_apply(1.0, -1, ladder_wave(LadderFamily::BoundHarmonic, n + 1));
      CHECK(*up.energy() == Complex(n + 1.5));
      for (double x : linspace(-4.0, 4.0, 17)) {
        const Complex next = ladder_state(LadderFamily::BoundHarmonic, n + 1, x).value;
        const Complex cur = ladder_state(LadderFamily::BoundHarmonic, n, x).value;
        CHECK(std::abs(up.value(x) - std::sqrt(n + 1.0) * next) < 1e-12);
        CHECK(std::abs(down.value(x) - std::sqrt(n + 1.0) * cur) < 1e-12);
      }
    }
    // the ground state is annihilated
    const Wave zero = ladder_apply(1.0, -1, ladder_wave(LadderFamily::BoundHarmonic, 0));
    for (double x : {-2.0, 0.3, 1.7}) CHECK(std::abs(zero.value(x)) < 1e-14);
  }

  TEST_CASE("a_i shifts energies by +-i") {
    const Wave w = ladder_wave(LadderFamily::InvertedMinus, 2);
    const Wave up = ladder_apply(kI, +1, w);
    CHECK(*up.energy() == Complex(0.0, 3.5));
    const Wave Hu = hamiltonian_apply(kI, up);
    for (double x : {-1.5, 0.2, 2.0}) CHECK(std::abs(Hu.value(x) - Complex(0.0, 3.5) * up.value(x)) < 1e-10);
  }

  TEST_CASE("commutators and factorizations") {
    for (Complex omega : {Complex(1.0), kI}) {
      const DiagnosticReport r = algebra_residuals(omega, 3, 777);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
      }
    }
  }

  TEST_CASE("bound-state orthonormality on a window") {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        const auto f = [m](double x) { return ladder_state(LadderFamily::BoundHarmonic, m, x).value; };
        const auto g = [n](double x) { return ladder_state(LadderFamily::BoundHarmonic, n, x).value; };
        CHECK(std::abs(window_inner_product(f, g, 12.0) - (m == n ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }

  TEST_CASE("missing derivative") {
    const Wave v = Wave::values([](double x) { return Complex(x); });
    CHECK_THROWS_AS(ladder_apply(1.0, 1, v), Error);
  }
}
