#include <quadmath.h>

#include <array>
#include <cmath>

#include "invosc/error.hpp"
#include "invosc/specfun.hpp"

namespace invosc {

namespace {

using quad = __float128;

struct QComplex {
  quad re = 0;
  quad im = 0;
};

QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
QComplex operator-(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
QComplex operator*(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex operator/(QComplex a, QComplex b) {
  // scaled to avoid overflow in |b|^2
  const quad s = fabsq(b.re) > fabsq(b.im) ? fabsq(b.re) : fabsq(b.im);
  const QComplex bs{b.re / s, b.im / s};
  const quad den = bs.re * bs.re + bs.im * bs.im;
  return {(a.re * bs.re + a.im * bs.im) / den / s, (a.im * bs.re - a.re * bs.im) / den / s};
}

QComplex qlog(QComplex z) { return {logq(hypotq(z.re, z.im)), atan2q(z.im, z.re)}; }

QComplex qexp(QComplex z) {
  const quad m = expq(z.re);
  return {m * cosq(z.im), m * sinq(z.im)};
}

// B_{2k} / (2k (2k-1)) numerators and denominators, k = 1..15.
constexpr std::array<std::pair<double, double>, 15> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

// Stirling series for log Gamma(w) without the (1/2) log(2 pi) constant,
// which cancels in the ratio. Requires Re w and |w| large.
QComplex stirling_core(QComplex w) {
  const QComplex half{static_cast<quad>(0.5), 0};
  QComplex result = (w - half) * qlog(w) - w;
  const QComplex w2 = w * w;
  QComplex wpow = w;  // w^{2k-1}
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const quad b2k = static_cast<quad>(kBernoulli[k - 1].first) / static_cast<quad>(kBernoulli[k - 1].second);
    const quad c = b2k / static_cast<quad>((2 * k) * (2 * k - 1));
    result = result + QComplex{c, 0} / wpow;
    wpow = wpow * w2;
  }
  return result;
}

}  // namespace

std::pair<Complex, Complex> gamma_ratio_half_extended(Complex t) { return gamma_ratio_half_extended(t, 0.0); }

std::pair<Complex, Complex> gamma_ratio_half_extended(Complex t, Complex t_lo) {
  if (is_nonpositive_integer(t + 0.5)) {
    throw Error(ErrorKind::Pole, "Gamma(t + 1/2) has a pole");
  }
  if (is_nonpositive_integer(t)) return {0.0, 0.0};

  const QComplex tq{static_cast<quad>(t.real()) + static_cast<quad>(t_lo.real()),
                    static_cast<quad>(t.imag()) + static_cast<quad>(t_lo.imag())};
  const QComplex half{static_cast<quad>(0.5), 0};

  // Gamma(t+1/2)/Gamma(t) = [Gamma(w+1/2)/Gamma(w)] * prod_{k<N} (t+k)/(t+k+1/2), w = t+N
  int shift = 0;
  while (t.real() + shift < 40.0 || std::abs(t + static_cast<double>(shift)) < 40.0) ++shift;
  QComplex prod{1, 0};
  for (int k = 0; k < shift; ++k) {
    const QComplex tk = tq + QComplex{static_cast<quad>(k), 0};
    prod = prod * (tk / (tk + half));
  }
  const QComplex w = tq + QComplex{static_cast<quad>(shift), 0};
  const QComplex ratio = qexp(stirling_core(w + half) - stirling_core(w)) * prod;

  const double hr = static_cast<double>(ratio.re);
  const double hi = static_cast<double>(ratio.im);
  const double lr = static_cast<double>(ratio.re - static_cast<quad>(hr));
  const double li = static_cast<double>(ratio.im - static_cast<quad>(hi));
  return {Complex(hr, hi), Complex(lr, li)};
}

}  // namespace invosc
