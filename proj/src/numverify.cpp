#include "isochron/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iostream>
#include <sstream>

#include "isochron/errors.hpp"

namespace isochron {

namespace {

using State = std::array<double, 2>;

double ipow(double x, int k) {
  double r = 1.0;
  for (int n = 0; n < k; ++n) r *= x;
  return r;
}

// Dormand–Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
  State y;
  State f;
  State err;
};

/// One DP5 step of size h from (y, f = rhs(y)).
template <class Rhs>
StepResult dp_step(const Rhs& rhs, const State& y, const State& k1, double h) {
  auto comb = [&](std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [w, k] : terms) {
      out[0] += h * w * (*k)[0];
      out[1] += h * w * (*k)[1];
    }
    return out;
  };
  const State k2 = rhs(comb({{a21, &k1}}));
  const State k3 = rhs(comb({{a31, &k1}, {a32, &k2}}));
  const State k4 = rhs(comb({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const State k5 = rhs(comb({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const State k6 = rhs(comb({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  const State y5 = comb({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  const State k7 = rhs(y5);
  State err;
  for (int d = 0; d < 2; ++d) {
    err[d] = h * (e1 * k1[d] + e3 * k3[d] + e4 * k4[d] + e5 * k5[d] + e6 * k6[d] + e7 * k7[d]);
  }
  return {y5, k7, err};
}

/// Root in (0, 1] of the cubic Hermite interpolant of one component.
double hermite_root(double v0, double dv0, double v1, double dv1, double h) {
  auto interp = [&](double s) {
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * v0 + (s3 - 2 * s2 + s) * h * dv0 + (-2 * s3 + 3 * s2) * v1 +
           (s3 - s2) * h * dv1;
  };
  double lo = 0.0, hi = 1.0;
  const double sign_lo = interp(lo) < 0 ? -1.0 : 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((interp(mid) < 0 ? -1.0 : 1.0) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

PeriodMeasurement integrate_to_return(const RealSystem& s, double r0, double tol, const IntegratorConfig& cfg) {
  const auto rhs = [&s](const State& y) { return s(y[0], y[1]); };
  const double rtol = tol;
  const double atol = cfg.atol_fraction * rtol * r0;
  const double t_max = cfg.time_budget_turns * 2.0 * std::numbers::pi;
  const int o = s.orientation();

  double t = 0.0;
  State y{r0, 0.0};
  State f = rhs(y);
  double h = 1e-3;
  bool left_section = false;
  PeriodMeasurement out;

  while (t < t_max) {
    if (out.steps++ > cfg.max_steps) throw NonPeriodicError("step limit exceeded");
    h = std::min(h, t_max - t);
    const StepResult step = dp_step(rhs, y, f, h);
    double err = 0.0;
    for (int d = 0; d < 2; ++d) {
      const double sc = atol + rtol * std::max(std::abs(y[d]), std::abs(step.y[d]));
      err = std::max(err, std::abs(step.err[d]) / sc);
    }
    if (!std::isfinite(err)) throw NonPeriodicError("integration produced a non-finite state");
    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (h < 1e-14) throw NonPeriodicError("step size underflow");
      continue;
    }

    const double v0 = o * y[1];
    const double v1 = o * step.y[1];
    if (left_section && v0 < 0.0 && v1 >= 0.0 && step.y[0] > 0.0) {
      // Crossing inside [t, t + h]: interpolate, then correct with real steps.
      double tau = h * hermite_root(v0, o * f[1], v1, o * step.f[1], h);
      for (int it = 0; it < 20; ++it) {
        const StepResult sub = dp_step(rhs, y, f, tau);
        const double delta = -sub.y[1] / sub.f[1];
        tau += delta;
        if (std::abs(delta) <= tol) break;
      }
      out.period = t + tau;
      return out;
    }
    if (v1 < 0.0) left_section = true;

    t += h;
    y = step.y;
    f = step.f;
    if (std::hypot(y[0], y[1]) > cfg.escape_radius) throw NonPeriodicError("orbit escaped the integration box");
    const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= grow;
  }
  throw NonPeriodicError("no return to the section within the time budget");
}

}  // namespace

RealSystem::RealSystem(const PlanarField& f) : orientation_(f.xi_sign() == XiSign::plus ? 1 : -1) {
  const GaussianRational i = GaussianRational::i();
  const BiPoly u = BiPoly::x();
  const BiPoly v = BiPoly::y();
  const BiPoly z = u + i * v;
  const BiPoly zbar = u - i * v;
  const BiPoly rhs = f.xi() * z + f.p().substitute(z, zbar);
  for (const auto& [e, c] : rhs.terms()) {
    du_exact_.add_term(e.i, e.j, GaussianRational(c.re()));
    dv_exact_.add_term(e.i, e.j, GaussianRational(c.im()));
  }
  for (const auto& [e, c] : du_exact_.terms()) du_.push_back({e.i, e.j, c.re().get_d()});
  for (const auto& [e, c] : dv_exact_.terms()) dv_.push_back({e.i, e.j, c.re().get_d()});
}

double RealSystem::eval(const std::vector<Term>& terms, double u, double v) {
  double s = 0.0;
  for (const auto& t : terms) s += t.c * ipow(u, t.a) * ipow(v, t.b);
  return s;
}

std::array<double, 2> RealSystem::operator()(double u, double v) const { return {eval(du_, u, v), eval(dv_, u, v)}; }

RealSystem to_real_system(const PlanarField& f) { return RealSystem(f); }

PeriodMeasurement measure_period_detailed(const RealSystem& s, double r0, double tol, bool estimate_error,
                                          const IntegratorConfig& cfg) {
  if (!(r0 > 0.0)) throw InputError("starting radius must be positive");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  IntegratorConfig c = cfg;
  c.rtol = tol;
  PeriodMeasurement m = integrate_to_return(s, r0, tol, c);
  if (estimate_error) {
    const PeriodMeasurement coarse = integrate_to_return(s, r0, 8.0 * tol, c);
    m.error_estimate = std::max(std::abs(m.period - coarse.period), 1e-12 * m.period);
  }
  return m;
}

double measure_period(const RealSystem& s, double r0, double tol) {
  return measure_period_detailed(s, r0, tol, false).period;
}

PeriodScan isochrony_scan(const PlanarField& f, const std::vector<double>& radii, double tol) {
  if (radii.empty()) throw InputError("radius list is empty");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0)) throw InputError("radii must be positive");
    if (k > 0 && !(radii[k] > radii[k - 1])) throw InputError("radii must be strictly ascending");
  }
  if (radii.back() > 0.5) std::clog << "warning: radii above 0.5 may leave the period annulus\n";

  const RealSystem s(f);
  std::vector<std::future<PeriodMeasurement>> jobs;
  for (double r : radii) {
    jobs.push_back(std::async(std::launch::async, [&s, r, tol] { return measure_period_detailed(s, r, tol); }));
  }
  PeriodScan scan;
  scan.radii = radii;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    try {
      const PeriodMeasurement m = jobs[k].get();
      scan.periods.push_back(m.period);
      scan.error_estimates.push_back(m.error_estimate);
    } catch (const NonPeriodicError& e) {
      std::ostringstream os;
      os << "radius " << radii[k] << ": " << e.what();
      throw NonPeriodicError(os.str());
    }
  }
  for (double T : scan.periods) {
    scan.max_rel_spread = std::max(scan.max_rel_spread, std::abs(T - scan.reference) / scan.reference);
  }
  return scan;
}

}  // namespace isochron
