#pragma once

// Pointwise evaluation over a grid. The parallel driver writes each result to
// its own slot, so output order (and content) matches the serial driver.

#include <exception>
#include <vector>

namespace invosc {

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  if (n == 1) {
    xs[0] = a;
    return xs;
  }
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  xs[n - 1] = b;
  return xs;
}

template <class F>
auto sample_serial(const F& f, const std::vector<double>& xs) {
  using R = decltype(f(0.0));
  std::vector<R> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(f(x));
  return out;
}

/// First exception thrown by any evaluation is rethrown after the loop.
template <class F>
auto sample(const F& f, const std::vector<double>& xs) {
  using R = decltype(f(0.0));
#ifdef INVOSC_HAVE_OPENMP
  std::vector<R> out(xs.size());
  std::exception_ptr failure;
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(invosc_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
#else
  return sample_serial<F>(f, xs);
#endif
}

}  // namespace invosc
