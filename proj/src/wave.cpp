#include "invosc/wave.hpp"

#include <string>
#include <utility>

#include "invosc/error.hpp"

namespace invosc {

Potential quadratic_potential(Complex omega) {
  const Complex k = 0.5 * omega * omega;
  return [k](double x, int order) { return k * Jet::variable(x, std::max(order, 0)) * Jet::variable(x, std::max(order, 0)); };
}

Jet sse_jet(const WaveEval& at, const Jet& V, Complex E, int order) {
  Jet c(order, at.value);
  if (order >= 1) c[1] = at.deriv;
  for (int k = 0; k + 2 <= order; ++k) {
    Complex s = 0.0;
    for (int j = 0; j <= k; ++j) {
      const Complex vj = (j == 0) ? V[0] - E : V[j];
      s += vj * c[k - j];
    }
    c[k + 2] = 2.0 * s / static_cast<double>((k + 2) * (k + 1));
  }
  return c;
}

Wave::Wave(JetFn fn, int max_order, std::optional<Complex> energy)
    : fn_(std::move(fn)), max_order_(max_order), energy_(energy) {}

Wave Wave::eigen(std::function<WaveEval(double)> eval, Potential V, Complex E) {
  auto fn = [eval = std::move(eval), V = std::move(V), E](double x, int order) {
    const WaveEval at = eval(x);
    if (order <= 1) {
      Jet j(order, at.value);
      if (order == 1) j[1] = at.deriv;
      return j;
    }
    return sse_jet(at, V(x, order - 2), E, order);
  };
  return Wave(std::move(fn), kUnbounded, E);
}

Wave Wave::sampled(std::function<WaveEval(double)> eval, double step) {
  auto fn = [eval = std::move(eval), step](double x, int order) {
    const WaveEval at = eval(x);
    Jet j(order, at.value);
    if (order >= 1) j[1] = at.deriv;
    if (order >= 2) j[2] = (eval(x + step).deriv - eval(x - step).deriv) / (4.0 * step);
    return j;
  };
  return Wave(std::move(fn), 2);
}

Wave Wave::values(std::function<Complex(double)> f) {
  auto fn = [f = std::move(f)](double x, int order) { return Jet(order, f(x)); };
  return Wave(std::move(fn), 0);
}

Jet Wave::jet(double x, int order) const {
  if (!fn_) throw Error(ErrorKind::InvalidArgument, "empty wave evaluator");
  if (order > max_order_) {
    throw Error(ErrorKind::MissingDerivative, "evaluator supplies derivatives up to order " +
                                                  std::to_string(max_order_) + ", " + std::to_string(order) +
                                                  " requested");
  }
  return fn_(x, order);
}

WaveEval Wave::eval(double x) const {
  const Jet j = jet(x, 1);
  return {j[0], j[1]};
}

Complex Wave::value(double x) const { return jet(x, 0)[0]; }

Wave Wave::with_energy(Complex E) const {
  Wave w(*this);
  w.energy_ = E;
  return w;
}

Complex fd_second(const std::function<Complex(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) / (12.0 * h * h);
}

Complex fd_first(const std::function<Complex(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

double fd_step(double x) noexcept { return 5e-3 / std::max(1.0, std::abs(x)); }

Residual sse_residual(const std::function<Complex(double)>& f, const std::function<Complex(double)>& V, Complex E,
                      double x) {
  const Complex f0 = f(x);
  const Complex f2 = fd_second(f, x, fd_step(x));
  Residual r;
  r.abs = std::abs(-0.5 * f2 + (V(x) - E) * f0);
  r.scale = std::abs(0.5 * f2) + std::abs(E * f0) + 1.0;
  return r;
}

}  // namespace invosc
