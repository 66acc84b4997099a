#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <vector>

#include "isochron/prepared.hpp"

namespace isochron {

/// Real form (u̇, v̇) = (Re ẋ, Im ẋ) of ẋ = ξx + P(x, conj x), x = u + iv.
class RealSystem {
 public:
  explicit RealSystem(const PlanarField& f);

  std::array<double, 2> operator()(double u, double v) const;

  /// Exact right-hand sides as polynomials in (u, v) with real coefficients.
  const BiPoly& du_exact() const { return du_exact_; }
  const BiPoly& dv_exact() const { return dv_exact_; }
  /// +1 when the linear part rotates counterclockwise (ξ = +i), else -1.
  int orientation() const { return orientation_; }

 private:
  struct Term {
    int a;
    int b;
    double c;
  };
  static double eval(const std::vector<Term>& terms, double u, double v);

  BiPoly du_exact_;
  BiPoly dv_exact_;
  std::vector<Term> du_;
  std::vector<Term> dv_;
  int orientation_;
};

RealSystem to_real_system(const PlanarField& f);

/// Dormand–Prince 5(4) settings. Relative tolerance defaults to 1e-10.
struct IntegratorConfig {
  double rtol = 1e-10;
  /// Absolute tolerance as a fraction of rtol * r0.
  double atol_fraction = 1e-3;
  /// Return must happen before time_budget_turns * 2π.
  double time_budget_turns = 10.0;
  double escape_radius = 1e3;
  std::size_t max_steps = 5'000'000;
};

struct PeriodMeasurement {
  double period = 0.0;
  /// max(|T(tol) - T(8 tol)|, 1e-12 T)
  double error_estimate = 0.0;
  std::size_t steps = 0;
};

/// First return time to {v = 0, u > 0} from (r0, 0), crossed in the
/// rotation sense of the linear part. The crossing is located by cubic
/// Hermite interpolation and then Newton-refined by re-integration until
/// the correction is below tol. Throws NonPeriodicError when no return
/// happens within the time budget or the orbit escapes; InputError for
/// r0 <= 0 or tol <= 0.
double measure_period(const RealSystem& s, double r0, double tol);
PeriodMeasurement measure_period_detailed(const RealSystem& s, double r0, double tol, bool estimate_error = true,
                                          const IntegratorConfig& cfg = {});

struct PeriodScan {
  std::vector<double> radii;
  std::vector<double> periods;
  std::vector<double> error_estimates;
  double max_rel_spread = 0.0;
  double reference = 2.0 * std::numbers::pi;
};

/// measure_period for each radius (computed concurrently, assembled in
/// radius order). Radii must be nonempty, positive and ascending; radii
/// above 0.5 print a warning. Per-radius failures are rethrown with the
/// radius in the message.
PeriodScan isochrony_scan(const PlanarField& f, const std::vector<double>& radii, double tol);

}  // namespace isochron
