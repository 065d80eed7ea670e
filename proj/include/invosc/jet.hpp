#pragma once

// Truncated Taylor expansions ("jets") f(x0 + t) = sum_k c_k t^k, k <= order.
// Operators of the factorization algebra act on jets exactly, so derivative
// stacks of order five or six never go through finite differences.

#include <algorithm>
#include <vector>

#include "invosc/types.hpp"

namespace invosc {

class Jet {
 public:
  Jet() = default;
  explicit Jet(int order, Complex c0 = 0.0) : c_(static_cast<std::size_t>(order) + 1, 0.0) { c_[0] = c0; }
  explicit Jet(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

  /// Jet of the identity function about x0.
  static Jet variable(double x0, int order) {
    Jet j(order, x0);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }
  static Jet constant(Complex v, int order) { return Jet(order, v); }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool empty() const noexcept { return c_.empty(); }

  Complex operator[](int k) const { return k <= order() ? c_[static_cast<std::size_t>(k)] : Complex(0.0); }
  Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  Complex value() const { return c_.front(); }

  /// k-th derivative at x0.
  Complex derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * (*this)[k];
  }

  /// Jet of f'; the order drops by one.
  Jet d() const {
    const int n = order();
    if (n < 1) return Jet(0, 0.0);
    Jet r(n - 1);
    for (int k = 0; k < n; ++k) r.c_[k] = static_cast<double>(k + 1) * c_[k + 1];
    return r;
  }

  /// Jet of the antiderivative with value c0 at x0; the order rises by one.
  Jet integral(Complex c0) const {
    Jet r(order() + 1, c0);
    for (int k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] / static_cast<double>(k + 1);
    return r;
  }

  Jet truncated(int order) const {
    Jet r(*this);
    r.c_.resize(static_cast<std::size_t>(std::min(order, this->order())) + 1);
    return r;
  }

  Jet conj() const {
    Jet r(*this);
    for (auto& c : r.c_) c = std::conj(c);
    return r;
  }

  Jet& operator+=(const Jet& o) {
    const int n = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    const int n = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(Complex s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  Jet& operator+=(Complex s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(Jet a, Complex s) { return a *= s; }
  friend Jet operator*(Complex s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, double s) { return a *= Complex(s); }
  friend Jet operator*(double s, Jet a) { return a *= Complex(s); }
  friend Jet operator+(Jet a, Complex s) { return a += s; }
  friend Jet operator-(Jet a, Complex s) { return a += -s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Jet r(n);
    for (int k = 0; k <= n; ++k) {
      Complex s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Jet r(n);
    const Complex b0 = b.c_[0];
    for (int k = 0; k <= n; ++k) {
      Complex s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
      r.c_[k] = s / b0;
    }
    return r;
  }

  const std::vector<Complex>& coeffs() const noexcept { return c_; }

 private:
  std::vector<Complex> c_;
};

/// exp of a jet (f' = f a').
inline Jet exp(const Jet& a) {
  const int n = a.order();
  Jet r(n, std::exp(a[0]));
  for (int k = 1; k <= n; ++k) {
    Complex s = 0.0;
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * r[k - j];
    r[k] = s / static_cast<double>(k);
  }
  return r;
}

}  // namespace invosc
