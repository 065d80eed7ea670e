// Serial reference vs OpenMP drivers on the grid and quadrature kernels.
// Prints median wall time per driver, the speedup, and whether the two
// results are bit-identical.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#ifdef INVOSC_HAVE_OPENMP
#include <omp.h>
#endif

#include "invosc/grid.hpp"
#include "invosc/oscillator.hpp"
#include "invosc/quadrature.hpp"
#include "invosc/susy.hpp"

using namespace invosc;

namespace {

template <class F>
double median_seconds(int reps, F&& run) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

template <class T>
bool same_bits(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

void row(const std::string& name, double serial, double parallel, bool identical) {
  std::printf("%-34s %12.4f %12.4f %8.2fx   %s\n", name.c_str(), serial * 1e3, parallel * 1e3, serial / parallel,
              identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel benchmark"};
  int reps = 5;
  int samples = 4001;
  double L = 80.0;
  app.add_option("--reps", reps, "repetitions per driver (median reported)")->check(CLI::PositiveNumber);
  app.add_option("--samples", samples, "grid points for the sampling kernels")->check(CLI::Range(2, 10000000));
  app.add_option("--window", L, "half-width of the quadrature window")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef INVOSC_HAVE_OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads %d, reps %d, samples %d, window %g\n\n", threads, reps, samples, L);
  std::printf("%-34s %12s %12s %9s   %s\n", "kernel", "serial ms", "parallel ms", "speedup", "identical");

  const auto xs = linspace(-10.0, 10.0, samples);

  {
    const SolutionSpec s{OscillatorKind::Inverted, -2.0, Combo::of(ComboTag::Left)};
    const auto f = [&](double x) { return psi_combo(s, x).value; };
    std::vector<Complex> a, b;
    const double ts = median_seconds(reps, [&] { a = sample_serial(f, xs); });
    const double tp = median_seconds(reps, [&] { b = sample(f, xs); });
    row("sample psi_L(E=-2)", ts, tp, same_bits(a, b));
  }

  {
    const ComplexTransform T(Complex(1e-5, 5.0));
    const auto f = [&](double x) { return T.V2(x); };
    std::vector<double> a, b;
    const double ts = median_seconds(reps, [&] { a = sample_serial(f, xs); });
    const double tp = median_seconds(reps, [&] { b = sample(f, xs); });
    row("sample V2(eps=1e-5+5i)", ts, tp, same_bits(a, b));
  }

  {
    const Complex n0 = normalization_NE(0.0).value, n1 = normalization_NE(1.0).value;
    const Complex k0 = kappa_P(0.0), k1 = kappa_P(1.0);
    const auto plus = [](Complex n, Complex k, double E, double x) {
      return n * (psi_even(E, x).value - k * psi_odd(E, x).value);
    };
    const Integrand f = [&](double x) { return std::conj(plus(n0, k0, 0.0, x)) * plus(n1, k1, 1.0, x); };
    QuadResult a, b;
    const double ts = median_seconds(reps, [&] { a = integrate_serial(f, 0.0, L); });
    const double tp = median_seconds(reps, [&] { b = integrate(f, 0.0, L); });
    row("integrate psi+_0* psi+_1 on [0, L]", ts, tp,
        a.value == b.value && a.error == b.error && a.evaluations == b.evaluations);
  }
  return 0;
}
