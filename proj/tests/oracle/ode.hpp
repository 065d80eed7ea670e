#pragma once

// -psi''/2 + V psi = E psi integrated with Dormand-Prince (odeint).

#include <algorithm>
#include <boost/numeric/odeint.hpp>

#include <array>
#include <complex>
#include <functional>

namespace oracle {

using cplx = std::complex<double>;
using State = std::array<cplx, 2>;  // psi, psi'

inline State shoot(const std::function<cplx(double)>& V, cplx E, double x0, State y, double x1, double tol = 1e-12) {
  namespace ode = boost::numeric::odeint;
  auto rhs = [&](const State& s, State& ds, double x) {
    ds[0] = s[1];
    ds[1] = 2.0 * (V(x) - E) * s[0];
  };
  // linear equation: integrate a unit-size state so the absolute tolerance acts as a relative one
  const double scale = std::abs(y[0]) + std::abs(y[1]) / std::max(1.0, std::abs(x0));
  if (scale == 0.0) return y;
  for (auto& c : y) c /= scale;
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>());
  ode::integrate_adaptive(stepper, rhs, y, x0, x1, (x1 - x0) / 1000.0);
  for (auto& c : y) c *= scale;
  return y;
}

}  // namespace oracle
