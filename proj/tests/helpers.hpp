#pragma once

#include <algorithm>
#include <complex>
#include <random>

#include "invosc/types.hpp"

namespace testing {

inline double rel(invosc::Complex a, invosc::Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline invosc::Complex rand_c(std::mt19937& g, double r0, double r1, double i0, double i1) {
  std::uniform_real_distribution<double> re(r0, r1), im(i0, i1);
  const double r = re(g);
  return {r, im(g)};
}

}  // namespace testing
