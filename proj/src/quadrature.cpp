#include "invosc/quadrature.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "invosc/error.hpp"

namespace invosc {

namespace {

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Gk {
  Complex value;
  double error;
  double abs_value;  // Kronrod estimate of int |f|
};

Gk gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex rk = fc * kWgk[7];
  Complex rg = fc * kWg[3];
  double rabs = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const Complex f1 = f(c - dx);
    const Complex f2 = f(c + dx);
    rk += kWgk[j] * (f1 + f2);
    rabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
  }
  const double ah = std::abs(h);
  return {rk * h, std::abs((rk - rg) * h), rabs * ah};
}

struct PanelResult {
  Complex value;
  double error = 0.0;
  long evaluations = 0;
  long subdivisions = 0;
  bool ok = true;
};

// Recursive bisection with an explicit stack; tolerance is local to the
// panel: err <= max(abs_floor, rel_tol * int|f|). abs_floor is the panel's
// width share of max(abs_tol, rel_tol * int_a^b |f|).
PanelResult adapt(const Integrand& f, double a, double b, double abs_floor, const QuadOptions& opt, long budget) {
  PanelResult out;
  struct Item {
    double a, b;
    int depth;
  };
  std::vector<Item> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const Gk r = gk15(f, it.a, it.b);
    out.evaluations += 15;
    const double tol = std::max(abs_floor * (it.b - it.a) / (b - a), opt.rel_tol * r.abs_value);
    if (r.error <= tol || it.depth >= 40) {
      if (r.error > tol) out.ok = false;
      out.value += r.value;
      out.error += r.error;
      continue;
    }
    if (++out.subdivisions > budget) {
      out.ok = false;
      out.value += r.value;
      out.error += r.error;
      continue;
    }
    const double m = 0.5 * (it.a + it.b);
    stack.push_back({m, it.b, it.depth + 1});
    stack.push_back({it.a, m, it.depth + 1});
  }
  return out;
}

std::vector<double> panel_edges(double a, double b, const QuadOptions& opt) {
  std::vector<double> edges{a};
  const double dir = b > a ? 1.0 : -1.0;
  double x = a;
  while (dir * (b - x) > 0.0) {
    const double k = opt.wavenumber ? opt.wavenumber(x) : std::abs(x);
    // look ahead one step so the panel width respects the far end too
    double w = kPi / (4.0 * std::max(1.0, k));
    const double k2 = opt.wavenumber ? opt.wavenumber(x + dir * w) : std::abs(x + dir * w);
    w = std::min(w, kPi / (4.0 * std::max(1.0, k2)));
    x += dir * w;
    if (dir * (b - x) < 1e-3 * w) x = b;
    edges.push_back(x);
  }
  return edges;
}

// Neumaier summation in panel order.
QuadResult reduce(const std::vector<PanelResult>& parts) {
  QuadResult res;
  double sr = 0, cr = 0, si = 0, ci = 0;
  auto add = [](double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) c += (s - t) + v; else c += (v - t) + s;
    s = t;
  };
  for (const auto& p : parts) {
    add(sr, cr, p.value.real());
    add(si, ci, p.value.imag());
    res.error += p.error;
    res.evaluations += p.evaluations;
  }
  res.value = {sr + cr, si + ci};
  res.panels = static_cast<long>(parts.size());
  return res;
}

void check(const std::vector<PanelResult>& parts, double a, double b) {
  for (const auto& p : parts) {
    if (!p.ok || !is_finite(p.value)) {
      throw Error(ErrorKind::QuadratureFailure,
                  "tolerance not reached on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    }
  }
}

void validate(double a, double b, const QuadOptions& opt) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorKind::InvalidArgument, "non-finite interval");
  if (!(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerances must be > 0");
}

}  // namespace

QuadResult integrate_serial(const Integrand& f, double a, double b, const QuadOptions& opt) {
  validate(a, b, opt);
  if (a == b) return {};
  const auto edges = panel_edges(a, b, opt);
  const std::size_t n = edges.size() - 1;
  const long budget = std::max<long>(64, opt.max_subdivisions / static_cast<long>(n));
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) mass += gk15(f, edges[i], edges[i + 1]).abs_value;
  const double floor = std::max(opt.abs_tol, opt.rel_tol * mass);
  std::vector<PanelResult> parts(n);
  for (std::size_t i = 0; i < n; ++i) {
    parts[i] = adapt(f, edges[i], edges[i + 1], floor * std::abs(edges[i + 1] - edges[i]) / std::abs(b - a), opt,
                     budget);
  }
  check(parts, a, b);
  return reduce(parts);
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
#ifdef INVOSC_HAVE_OPENMP
  if (!opt.parallel) return integrate_serial(f, a, b, opt);
  validate(a, b, opt);
  if (a == b) return {};
  const auto edges = panel_edges(a, b, opt);
  const long n = static_cast<long>(edges.size()) - 1;
  const long budget = std::max<long>(64, opt.max_subdivisions / n);
  std::vector<double> masses(static_cast<std::size_t>(n));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      masses[i] = gk15(f, edges[i], edges[i + 1]).abs_value;
    } catch (...) {
#pragma omp critical(invosc_quad_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  double mass = 0.0;
  for (double m : masses) mass += m;
  const double floor = std::max(opt.abs_tol, opt.rel_tol * mass);
  std::vector<PanelResult> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      parts[i] = adapt(f, edges[i], edges[i + 1], floor * std::abs(edges[i + 1] - edges[i]) / std::abs(b - a), opt,
                       budget);
    } catch (...) {
#pragma omp critical(invosc_quad_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  check(parts, a, b);
  return reduce(parts);
#else
  return integrate_serial(f, a, b, opt);
#endif
}

}  // namespace invosc
