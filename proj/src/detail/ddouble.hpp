#pragma once

// Double-double arithmetic (unevaluated sum hi + lo, ~32 significant digits)
// built on error-free transformations. Used where the Kummer series and the
// cancelling seed combinations need more than 53 bits.

#include <cmath>
#include <complex>

namespace invosc::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD operator*(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return q + DD(q3);
}

inline DD operator/(DD a, double b) { return a / DD(b); }

/// Complex double-double.
struct CDD {
  DD re;
  DD im;

  constexpr CDD() = default;
  constexpr CDD(DD r, DD i) : re(r), im(i) {}
  CDD(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  double abs_approx() const { return std::hypot(re.hi, im.hi); }
};

inline CDD operator+(const CDD& a, const CDD& b) { return {a.re + b.re, a.im + b.im}; }
inline CDD operator-(const CDD& a, const CDD& b) { return {a.re - b.re, a.im - b.im}; }
inline CDD operator-(const CDD& a) { return {-a.re, -a.im}; }

inline CDD operator*(const CDD& a, const CDD& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline CDD operator*(const CDD& a, double s) { return {a.re * s, a.im * s}; }

inline CDD operator/(const CDD& a, const CDD& b) {
  const DD den = b.re * b.re + b.im * b.im;
  const DD nr = a.re * b.re + a.im * b.im;
  const DD ni = a.im * b.re - a.re * b.im;
  return {nr / den, ni / den};
}

inline CDD operator/(const CDD& a, double s) { return {a.re / s, a.im / s}; }

}  // namespace invosc::detail
