#include <doctest.h>

#include "helpers.hpp"
#include "invosc/algebra.hpp"
#include "invosc/error.hpp"
#include "invosc/grid.hpp"
#include "invosc/ladder.hpp"
#include "oracle/ode.hpp"

using namespace invosc;
using testing::rel;

namespace {

const Complex kEps(1e-5, 5.0);

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("operator identities") {
    const DiagnosticReport r = algebra_identities();
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.max_residual);
      CHECK(c.pass);
    }
  }

  TEST_CASE("P5 roots and Q4") {
    const Complex e(0.3, 1.7);
    for (Complex root : {e, std::conj(e), e + kI, std::conj(e) + kI, 0.5 * kI}) CHECK(std::abs(P5_eval(root, e)) < 1e-12);
    const Complex E(-0.4, 0.9);
    CHECK(rel(Q4_eval(E, e), P5_eval(E + kI, e) - P5_eval(E, e)) < 1e-14);
    // Q4 has degree four: fifth differences vanish
    Complex d5 = 0.0;
    const int binom[] = {1, -5, 10, -10, 5, -1};
    for (int k = 0; k <= 5; ++k) d5 += static_cast<double>(binom[k]) * Q4_eval(Complex(0.1 * k, 0.0), e);
    CHECK(std::abs(d5) < 1e-9);
  }

  TEST_CASE("psi2 solves the partner equation (ODE shooting)") {
    const ComplexTransform T(kEps);
    const auto V2 = [&](double x) { return Complex(T.V2(x)); };
    for (ComboTag t : {ComboTag::Left, ComboTag::Right, ComboTag::Plus}) {
      for (double E : {-2.0, 0.0, 1.0}) {
        const PartnerEigenfunction p{kEps, E, t, Normalization::BFactor};
        const WaveEval a = transformed_eigenfunction(p, -3.0), b = transformed_eigenfunction(p, 4.0);
        const auto y = oracle::shoot(V2, E, -3.0, {a.value, a.deriv}, 4.0, 1e-11);
        const double scale = std::abs(b.value) + std::abs(b.deriv) / 4.0;
        CHECK(std::abs(y[0] - b.value) < 1e-7 * scale);
      }
    }
  }

  TEST_CASE("closed form is twice B+ psi") {
    for (ComboTag t : {ComboTag::Left, ComboTag::Minus}) {
      const PartnerEigenfunction raw{kEps, -1.0, t, Normalization::Raw};
      PartnerEigenfunction unit = raw;
      unit.normalization = Normalization::BFactor;
      const Wave psi = base_eigenfunction(raw);
      for (double x : {-5.0, -0.5, 0.0, 2.0, 7.0}) {
        const Complex bp = apply_Bplus(kEps, psi, x);
        CHECK(rel(closed_form_psi2(raw, x), kClosedFormFactor * bp) < 1e-10);
        CHECK(rel(transformed_eigenfunction(raw, x).value, 2.0 * bp) < 1e-10);
        CHECK(rel(transformed_eigenfunction(unit, x).value, bp / std::abs(-1.0 - kEps)) < 1e-10);
      }
    }
  }

  TEST_CASE("ladder operators move the energy tag by i") {
    const ComplexTransform T(kEps);
    const Wave f = damped_polynomial({1.0, 0.2, -0.3});
    CHECK_THROWS_AS(apply_L(T, +1, f), Error);
    const Wave tagged = f.with_energy(Complex(0.5, 0.0));
    CHECK(*apply_L(T, +1, tagged).energy() == Complex(0.5, 1.0));
    CHECK(*apply_L(T, -1, tagged).energy() == Complex(0.5, -1.0));
    const Wave shallow = Wave::sampled([&](double x) { return f.eval(x); }).with_energy(0.5);
    CHECK_THROWS_AS(apply_L(T, +1, shallow), Error);
  }

  TEST_CASE("no normalizable states of H2 on a real-energy scan") {
    const ComplexTransform T(kEps);
    const auto r = shooting_tail_ratios(T, linspace(-3.0, 3.0, 7));
    for (double v : r) CHECK(v > 0.5);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS((PartnerEigenfunction{2.0, 0.0, ComboTag::Left, Normalization::Raw}.validate()), Error);
    CHECK_THROWS_AS((PartnerEigenfunction{kEps, 0.0, ComboTag::Even, Normalization::Raw}.validate()), Error);
    CHECK_THROWS_AS((PartnerEigenfunction{kEps, NAN, ComboTag::Left, Normalization::Raw}.validate()), Error);
    CHECK_NOTHROW((PartnerEigenfunction{kEps, -2.0, ComboTag::Left, Normalization::Raw}.validate()));
  }
}
