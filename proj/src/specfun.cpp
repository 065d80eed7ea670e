#include "invosc/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "detail/kummer_dd.hpp"
#include "invosc/error.hpp"

namespace invosc {

namespace {

// Lanczos approximation with 13 terms, g = 6.0246800407767..., tuned for
// 53-bit doubles (the same rational form used by Boost.Math's lanczos13m53).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr std::array<double, 13> kLanczosDen = {
    0.0,      39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0, 357423.0,  32670.0,     1925.0,      66.0,        1.0,
};

Complex lanczos_sum(Complex z) {
  Complex num;
  Complex den;
  if (std::abs(z) <= 1.0) {
    for (int i = 12; i >= 0; --i) {
      num = num * z + kLanczosNum[i];
      den = den * z + kLanczosDen[i];
    }
  } else {
    const Complex zi = 1.0 / z;
    for (int i = 0; i <= 12; ++i) {
      num = num * zi + kLanczosNum[i];
      den = den * zi + kLanczosDen[i];
    }
  }
  return num / den;
}

// log(sin(pi z)) without overflow for large |Im z|; defined modulo 2 pi i.
Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(std::sin(kPi * z));
  if (y > 0.0) {
    return -kI * kPi * z + std::log(1.0 - std::exp(2.0 * kI * kPi * z)) + std::log(kI / 2.0);
  }
  return kI * kPi * z + std::log(1.0 - std::exp(-2.0 * kI * kPi * z)) - std::log(2.0 * kI);
}

// e^{+-i pi a} factor of the algebraic term, returned as (log part, extra
// factor). The + branch holds for -pi/2 < arg z < 3pi/2 and the - branch for
// -3pi/2 < arg z < pi/2. On the positive real axis both apply and the mean
// (cos(pi a)) keeps real input real.
std::pair<Complex, Complex> algebraic_phase(Complex a, Complex z) {
  if (z.imag() > 0.0 || (z.imag() == 0.0 && z.real() < 0.0)) return {kI * kPi * a, 1.0};
  if (z.imag() < 0.0) return {-kI * kPi * a, 1.0};
  return {0.0, std::cos(kPi * a)};
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 1) throw Error(ErrorKind::InvalidArgument, "max_terms must be >= 1");
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "rel_tol must be > 0");
  if (!(switch_radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "switch_radius must be > 0");
  if (asymp_terms < 1) throw Error(ErrorKind::InvalidArgument, "asymp_terms must be >= 1");
}

bool is_nonpositive_integer(Complex z, double tol) noexcept {
  if (z.real() > tol) return false;
  const double n = std::round(z.real());
  return std::abs(z - Complex(n, 0.0)) < tol;
}

Complex ln_gamma(Complex z) {
  if (!is_finite(z)) throw Error(ErrorKind::InvalidArgument, "ln_gamma of a non-finite argument");
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorKind::Pole, "Gamma has a pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - ln_gamma(1.0 - z);
  }
  const Complex zgh = z + (kLanczosG - 0.5);
  return std::log(lanczos_sum(z)) + (z - 0.5) * std::log(zgh) - zgh;
}

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-ln_gamma(z));
}

namespace detail {

CDD kummer_series_dd(const CDD& aa, const CDD& bb, const CDD& za, const SeriesControl& ctl) {
  const Complex a = aa.to_complex(), b = bb.to_complex();
  if (is_nonpositive_integer(b)) {
    throw Error(ErrorKind::ParameterPole, "1F1 with b a non-positive integer");
  }
  CDD term(DD(1.0), DD(0.0));
  CDD sum = term;
  const double zabs = za.abs_approx();
  for (int n = 0; n < ctl.max_terms; ++n) {
    const CDD an = aa + CDD(Complex(n, 0.0));
    const CDD bn = bb + CDD(Complex(n, 0.0));
    term = term * (an * za) / (bn * static_cast<double>(n + 1));
    sum = sum + term;
    const double tabs = term.abs_approx();
    if (tabs == 0.0) return sum;
    const double ratio =
        std::abs(a + static_cast<double>(n + 1)) * zabs / (std::abs(b + static_cast<double>(n + 1)) * (n + 2));
    if (ratio < 0.5 && tabs < ctl.rel_tol * sum.abs_approx()) return sum;
  }
  throw Error(ErrorKind::NoConvergence,
              "Kummer series did not converge in " + std::to_string(ctl.max_terms) + " terms");
}

CDD kummer_series_dd(Complex a, Complex b, const CDD& z, const SeriesControl& ctl) {
  return kummer_series_dd(CDD(a), CDD(b), z, ctl);
}

CDD kummer_series_dd(Complex a, Complex b, Complex z, const SeriesControl& ctl) {
  return kummer_series_dd(a, b, CDD(z), ctl);
}

}  // namespace detail

PoincareSum poincare_2f0(Complex p, Complex q, Complex t, int max_terms) {
  Complex term = 1.0;
  Complex sum = 1.0;
  Complex dsum = 0.0;
  double last = 1.0;
  double tail = 0.0;
  int s = 0;
  for (;; ++s) {
    const Complex next = term * (p + static_cast<double>(s)) * (q + static_cast<double>(s)) /
                         static_cast<double>(s + 1) * t;
    const double nabs = std::abs(next);
    if (s >= max_terms - 1 || nabs >= last) {  // optimal truncation
      tail = nabs;
      break;
    }
    term = next;
    last = nabs;
    sum += term;
    // d/dt of c_{s+1} t^{s+1}
    dsum += static_cast<double>(s + 1) * term / t;
    if (nabs <= 1e-18 * std::abs(sum)) {
      ++s;
      break;
    }
  }
  return {sum, dsum, s + 1, tail};
}

KummerFunction::KummerFunction(Complex a, Complex b, SeriesControl ctl) : a_(a), b_(b), ctl_(ctl) {
  ctl_.validate();
  if (is_nonpositive_integer(b_)) {
    throw Error(ErrorKind::ParameterPole, "1F1 with b a non-positive integer");
  }
  const Complex lgb = ln_gamma(b_);
  dead_alg_ = is_nonpositive_integer(b_ - a_);
  dead_exp_ = is_nonpositive_integer(a_);
  if (!dead_alg_) log_alg_coeff_ = lgb - ln_gamma(b_ - a_);
  if (!dead_exp_) log_exp_coeff_ = lgb - ln_gamma(a_);
}

Complex KummerFunction::series(Complex z) const {
  return detail::kummer_series_dd(a_, b_, z, ctl_).to_complex();
}

KummerParts KummerFunction::asymptotic_parts(Complex z, Complex log_scale) const {
  if (z == 0.0) throw Error(ErrorKind::Domain, "asymptotic 1F1 at z = 0");
  const Complex logz = std::log(z);
  const Complex zi = 1.0 / z;
  KummerParts parts;
  if (!dead_alg_) {
    const auto s1 = poincare_2f0(a_, a_ - b_ + 1.0, -zi, ctl_.asymp_terms);
    const auto [log_phase, factor] = algebraic_phase(a_, z);
    const Complex pre = factor * std::exp(log_alg_coeff_ + log_phase - a_ * logz + log_scale);
    parts.algebraic.value = pre * s1.value;
    parts.algebraic.deriv = pre * zi * (-a_ * s1.value + s1.dvalue_dt * zi);
  }
  if (!dead_exp_) {
    const auto s2 = poincare_2f0(b_ - a_, 1.0 - a_, zi, ctl_.asymp_terms);
    const Complex pre = std::exp(log_exp_coeff_ + z + (a_ - b_) * logz + log_scale);
    parts.exponential.value = pre * s2.value;
    parts.exponential.deriv = pre * ((1.0 + (a_ - b_) * zi) * s2.value - s2.dvalue_dt * zi * zi);
  }
  return parts;
}

Complex KummerFunction::asymptotic(Complex z) const {
  const auto parts = asymptotic_parts(z);
  return parts.algebraic.value + parts.exponential.value;
}

KummerValue KummerFunction::scaled(Complex z, Complex log_scale) const {
  if (use_series(z)) {
    const Complex s = std::exp(log_scale);
    const Complex m = detail::kummer_series_dd(a_, b_, z, ctl_).to_complex();
    Complex dm = 0.0;
    if (a_ != 0.0) dm = a_ / b_ * detail::kummer_series_dd(a_ + 1.0, b_ + 1.0, z, ctl_).to_complex();
    return {s * m, s * dm};
  }
  const auto parts = asymptotic_parts(z, log_scale);
  return {parts.algebraic.value + parts.exponential.value, parts.algebraic.deriv + parts.exponential.deriv};
}

Complex KummerFunction::operator()(Complex z) const {
  if (z == 0.0) return 1.0;
  return use_series(z) ? series(z) : asymptotic(z);
}

Complex hyp1f1_series(Complex a, Complex b, Complex z, const SeriesControl& ctl) {
  ctl.validate();
  return detail::kummer_series_dd(a, b, z, ctl).to_complex();
}

Complex hyp1f1_asymptotic(Complex a, Complex b, Complex z, const SeriesControl& ctl) {
  return KummerFunction(a, b, ctl).asymptotic(z);
}

Complex hyp1f1(Complex a, Complex b, Complex z, const SeriesControl& ctl) {
  ctl.validate();
  if (z == 0.0) {
    if (is_nonpositive_integer(b)) throw Error(ErrorKind::ParameterPole, "1F1 with b a non-positive integer");
    return 1.0;
  }
  // for Re z < 0 the terms of the plain series dwarf the sum; e^z 1F1(b - a; b; -z) has no such cancellation
  const auto series = [&] {
    if (z.real() >= 0.0) return hyp1f1_series(a, b, z, ctl);
    return std::exp(z) * detail::kummer_series_dd(detail::CDD(b) - detail::CDD(a), detail::CDD(b), detail::CDD(-z), ctl).to_complex();
  };
  const double r = std::abs(z);
  if (r <= ctl.switch_radius) return series();
  if (r <= 2.0 * ctl.switch_radius) {
    // off the imaginary axis the expansion can still be poor here while the
    // double-double series has digits to spare
    const double t1 = poincare_2f0(a, a - b + 1.0, -1.0 / z, ctl.asymp_terms).tail;
    const double t2 = poincare_2f0(b - a, 1.0 - a, 1.0 / z, ctl.asymp_terms).tail;
    if (std::max(t1, t2) > 1e-15) return series();
  }
  return hyp1f1_asymptotic(a, b, z, ctl);
}

Complex hyp1f1_derivative(Complex a, Complex b, Complex z, const SeriesControl& ctl) {
  if (is_nonpositive_integer(b)) throw Error(ErrorKind::ParameterPole, "1F1 with b a non-positive integer");
  if (a == 0.0) return 0.0;
  return a / b * hyp1f1(a + 1.0, b + 1.0, z, ctl);
}

Complex hermite(int n, Complex z) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "hermite: n must be >= 0");
  Complex h_prev = 1.0;
  if (n == 0) return h_prev;
  Complex h = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const Complex h_next = 2.0 * z * h - 2.0 * static_cast<double>(k) * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

}  // namespace invosc
