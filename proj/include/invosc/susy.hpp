#pragma once

// First- and second-order SUSY (Darboux) transformations of the inverted
// oscillator V0 = -x^2/2.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "invosc/oscillator.hpp"
#include "invosc/quadrature.hpp"
#include "invosc/wave.hpp"

namespace invosc {

// ---------------------------------------------------------------- energies

enum class EpsClass { QuadrantI_II, QuadrantIII_IV, ExcludedRealAxis, ExcludedLatticePoint };
std::string_view to_string(EpsClass c) noexcept;

struct FactorizationEnergy {
  Complex eps;
  EpsClass classification = EpsClass::ExcludedRealAxis;
  int lattice_m = -1;            // nearest m with eps ~ +-i(m + 1/2)
  double lattice_distance = 0.0;  // distance to that point

  bool usable() const noexcept {
    return classification == EpsClass::QuadrantI_II || classification == EpsClass::QuadrantIII_IV;
  }
};

/// Excluded: |Im eps| < 1e-9, or within 1e-9 of +-i(m + 1/2), m >= 0.
FactorizationEnergy validate_epsilon(Complex eps);

// ---------------------------------------------------------------- scans

enum class ZeroKind { SeedZero, WronskianZero, WZero };
std::string_view to_string(ZeroKind k) noexcept;

struct SingularPoint {
  double location;
  ZeroKind kind;
};

struct SingularityReport {
  std::vector<SingularPoint> zeros;
  double a = 0.0;
  double b = 0.0;
  bool is_singular = false;
};

/// Sign changes of f on a uniform grid are refined by bisection to 1e-10;
/// grid minima of |f| / scale(x) below 1e-8 are flagged as well.
SingularityReport singularity_scan(const std::function<double(double)>& f, double a, double b, int samples,
                                   ZeroKind kind = ZeroKind::SeedZero,
                                   const std::function<double(double)>& scale = {});

// ---------------------------------------------------------------- first order

/// u'/u. Throws Error(SeedZero) where |u| <= 1e-14 |u'|.
Complex superpotential(const Wave& u, double x);
Complex superpotential(const WaveEval& u);

/// V1 = V0 - (u'/u)' = -x^2/2 - [2(V0 - eps) - (u'/u)^2] for the real seed
/// C psi_e + D psi_o at energy eps. Throws Error(SeedZero).
double first_order_partner(double eps, double C, double D, double x);

// ---------------------------------------------------------------- second order

enum class SusyCase { Real, Confluent, Complex };
std::string_view to_string(SusyCase c) noexcept;

/// Constants shared by all second-order cases: eps = (d + xi)/2, xi^2 = c.
struct SusyConstants {
  double c = 0.0;
  double d = 0.0;
};

/// Real case: seeds u1, u2 solving the SSE of V0 at distinct real energies.
class RealCaseTransform {
 public:
  RealCaseTransform(double eps1, Wave u1, double eps2, Wave u2, std::function<double(double)> V0);
  /// Inverted oscillator with seeds C psi_e + D psi_o.
  static RealCaseTransform inverted(double eps1, Combo c1, double eps2, Combo c2);

  SusyConstants constants() const noexcept { return {(eps1_ - eps2_) * (eps1_ - eps2_), eps1_ + eps2_}; }
  double eps1() const noexcept { return eps1_; }
  double eps2() const noexcept { return eps2_; }

  /// W = u1 u2' - u1' u2, W' = 2(eps1 - eps2) u1 u2, W''.
  std::array<Complex, 3> wronskian(double x) const;
  /// V2 = V0 - (log W)''. Throws Error(WronskianZero).
  double V2(double x) const;
  SingularityReport scan(double a, double b, int samples) const;

 private:
  double eps1_;
  double eps2_;
  Wave u1_;
  Wave u2_;
  std::function<double(double)> V0_;
};

double real_case_partner(double eps1, const Wave& u1, double eps2, const Wave& u2, double x,
                         const std::function<double(double)>& V0);

/// Confluent case: w(x) = w0 + int_{x0}^x u^2 for a real seed u.
class ConfluentTransform {
 public:
  ConfluentTransform(double eps, Combo seed, double w0 = 0.0, double x0 = 0.0, QuadOptions quad = {});

  SusyConstants constants() const noexcept { return {0.0, 2.0 * eps_}; }
  double eps() const noexcept { return eps_; }
  double w0() const noexcept { return w0_; }
  double x0() const noexcept { return x0_; }

  WaveEval seed(double x) const;
  /// Quadrature within |x - x0| <= near_range(), beyond that the exact
  /// antiderivative -(u du'/de - u' du/de)/2 anchored at the edge.
  double w(double x) const;
  /// Plain quadrature from x0 (no memo, no far-field formula).
  double w_quadrature(double x) const;
  /// -(u du'/de - u' du/de)/2 with the energy derivative by differences.
  double antiderivative(double x) const;
  double V2(double x) const;

  /// Sign change of the monotone w on [-span, span], refined by bisection.
  SingularityReport scan(double span = 1e6) const;

  static constexpr double near_range() { return 30.0; }

 private:
  double cumulative(int knot) const;

  double eps_;
  Combo seed_;
  double w0_;
  double x0_;
  QuadOptions quad_;
  // cumulative integrals from x0 to x0 + k (k signed), filled in order
  struct Memo {
    std::mutex mutex;
    std::map<int, double> knots;
  };
  std::shared_ptr<Memo> memo_;
};

double confluent_w(double eps, Combo seed, double w0, double x0, double x);

/// Transformation functions of the complex case (V0 = -x^2/2):
/// u_P = psi_e - kappa_P psi_o (decays on x > 0 for Im eps > 0),
/// u_N = psi_e - kappa_N psi_o (decays on x > 0 for Im eps < 0).
/// The cancelling combination is formed in extended precision.
WaveEval seed_uP(Complex eps, double x);
WaveEval seed_uN(Complex eps, double x);

class ComplexTransform {
 public:
  /// Throws Error(Classification) for excluded eps.
  explicit ComplexTransform(Complex eps);

  const FactorizationEnergy& energy() const noexcept { return energy_; }
  Complex eps() const noexcept { return energy_.eps; }
  SusyConstants constants() const noexcept;

  /// u_P for Im eps > 0, u_N for Im eps < 0.
  WaveEval seed(double x) const;
  Jet seed_jet(double x, int order) const;

  /// w = W(u, conj u) / (2(eps - conj eps)) = Im(u conj(u')) / (2 Im eps).
  double w(double x) const;
  /// Jets of w, g = w'/w and h = g'/2 + g^2/2 - 2 V0 + d.
  Jet w_jet(double x, int order) const;
  Jet g_jet(double x, int order) const;
  Jet h_jet(double x, int order) const;

  /// V2 from u, u', w (no derivatives of w). Throws Error(WZero).
  double V2(double x) const;
  /// V2 = V0 - (log w)'' through jets.
  double V2_from_log(double x) const;
  Jet V2_jet(double x, int order) const;

  /// |w| < 1e-12 max(|u|^2 (1 + |x|), tiny).
  bool w_vanishes(double x) const;
  SingularityReport scan(double a, double b, int samples) const;

 private:
  void require_w(double x, double w, double u2) const;
  FactorizationEnergy energy_;
};

double complex_w(Complex eps, double x);
double complex_partner(Complex eps, double x);

/// Shared V0 = -x^2/2.
double inverted_potential(double x) noexcept;

}  // namespace invosc
