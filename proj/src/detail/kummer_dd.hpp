#pragma once

#include "detail/ddouble.hpp"
#include "invosc/specfun.hpp"

namespace invosc::detail {

/// Kummer series for 1F1(a; b; z) with terms and partial sums carried in
/// double-double. Throws ParameterPole / NoConvergence.
CDD kummer_series_dd(Complex a, Complex b, Complex z, const SeriesControl& ctl);
CDD kummer_series_dd(Complex a, Complex b, const CDD& z, const SeriesControl& ctl);
CDD kummer_series_dd(const CDD& a, const CDD& b, const CDD& z, const SeriesControl& ctl);

inline CDD to_cdd(const std::pair<Complex, Complex>& hi_lo) {
  const auto& [hi, lo] = hi_lo;
  return {DD(hi.real()) + DD(lo.real()), DD(hi.imag()) + DD(lo.imag())};
}

}  // namespace invosc::detail
