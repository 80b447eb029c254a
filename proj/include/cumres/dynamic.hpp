#pragma once

// Residual-lifetime and past-lifetime measures: dynamic cumulative
// residual/past entropy and inaccuracy, their analytic derivatives,
// monotonicity classification of curves, the proportional (reversed)
// hazards and linear-transformation identities, the tau2 transform with
// its conditional-expectation route, and the Z_t identity.

#include <cmath>
#include <string>
#include <vector>

#include "cumres/measures.hpp"

namespace cumres {

/// -int_t^hi (S/S(t)) ln(S/S(t)).
inline MeasureValue dcre(const DistributionHandle& X, double t, const QuadratureConfig& cfg = {}) {
  const double st = X.survival(t);
  if (!(st > 0)) throw std::domain_error("dcre: survival vanishes at t");
  auto integrand = [&X, st](double x) {
    const double u = X.survival(x) / st;
    return -xlogy(u, u);
  };
  std::vector<double> splits;
  for (double b : X.breakpoints)
    if (b > t) splits.push_back(b);
  auto r = detail::integrate_measure(integrand, t, X.hi, splits, X.survival, cfg);
  return detail::tag("dcre", X.name + ";t=" + format_g9(t), r);
}

/// -int_t^hi (S_X/S_X(t)) ln(S_Y/S_Y(t)).
inline MeasureValue dcri(const DistributionHandle& X, const DistributionHandle& Y, double t,
                         const QuadratureConfig& cfg = {}) {
  const double sxt = X.survival(t), syt = Y.survival(t);
  if (!(sxt > 0) || !(syt > 0)) throw std::domain_error("dcri: survival vanishes at t");
  const std::string inputs = X.name + "," + Y.name + ";t=" + format_g9(t);
  if (X.hi > Y.hi + 1e-12) return detail::tag("dcri", inputs, {0.0, 0.0, false, true});
  const double lsyt = Y.ln_survival(t);
  auto integrand = [&X, &Y, sxt, lsyt](double x) {
    return -weighted_log(X.survival(x) / sxt, Y.ln_survival(x) - lsyt);
  };
  std::vector<double> splits;
  for (double b : detail::merged_breakpoints(X, Y))
    if (b > t) splits.push_back(b);
  auto r = detail::integrate_measure(integrand, t, X.hi, splits, X.survival, cfg);
  return detail::tag("dcri", inputs, r);
}

/// -int_lo^t (F/F(t)) ln(F/F(t)).
inline MeasureValue dcpe(const DistributionHandle& X, double t, const QuadratureConfig& cfg = {}) {
  const double ft = X.cdf(t);
  if (!(ft > 0)) throw std::domain_error("dcpe: cdf vanishes at t");
  auto integrand = [&X, ft](double x) {
    const double u = X.cdf(x) / ft;
    return -xlogy(u, u);
  };
  auto r = detail::integrate_measure(integrand, X.lo, t, X.breakpoints, {}, cfg);
  return detail::tag("dcpe", X.name + ";t=" + format_g9(t), r);
}

/// -int_lo^t (F_X/F_X(t)) ln(F_Y/F_Y(t)).
inline MeasureValue dcpi(const DistributionHandle& X, const DistributionHandle& Y, double t,
                         const QuadratureConfig& cfg = {}) {
  const double fxt = X.cdf(t), gyt = Y.cdf(t);
  if (!(fxt > 0) || !(gyt > 0)) throw std::domain_error("dcpi: cdf vanishes at t");
  const std::string inputs = X.name + "," + Y.name + ";t=" + format_g9(t);
  if (Y.lo > X.lo + 1e-12) return detail::tag("dcpi", inputs, {0.0, 0.0, false, true});
  const double lgyt = Y.ln_cdf(t);
  auto integrand = [&X, &Y, fxt, lgyt](double x) {
    return -weighted_log(X.cdf(x) / fxt, Y.ln_cdf(x) - lgyt);
  };
  auto r = detail::integrate_measure(integrand, X.lo, t, detail::merged_breakpoints(X, Y), {},
                                     cfg);
  return detail::tag("dcpi", inputs, r);
}

// ---------------------------------------------------------------------------
// Derivatives

/// d/dt dcri(X,Y,t) = hazard_X(t)*dcri(t) - hazard_Y(t)*mrl_X(t).
inline double dcri_derivative(const DistributionHandle& X, const DistributionHandle& Y, double t,
                              const QuadratureConfig& cfg = {}) {
  const double lf = hazard_rate(X, t);
  const double lg = hazard_rate(Y, t);
  auto v = dcri(X, Y, t, cfg);
  auto mrl = mean_residual_life(X, t, cfg);
  if (v.diverged() || mrl.diverged)
    throw capability_error("dcri_derivative: measure diverges at t");
  return lf * v.value - lg * mrl.value;
}

/// d/dt dcpi(X,Y,t) = rev_hazard_Y(t)*mit_X(t) - rev_hazard_X(t)*dcpi(t).
inline double dcpi_derivative(const DistributionHandle& X, const DistributionHandle& Y, double t,
                              const QuadratureConfig& cfg = {}) {
  const double pf = reversed_hazard_rate(X, t);
  const double pg = reversed_hazard_rate(Y, t);
  auto v = dcpi(X, Y, t, cfg);
  if (v.diverged()) throw capability_error("dcpi_derivative: measure diverges at t");
  return pg * mean_inactivity_time(X, t, cfg) - pf * v.value;
}

// ---------------------------------------------------------------------------
// Curves and monotonicity

struct DynamicMeasureCurve {
  std::vector<double> t_grid;
  std::vector<double> values;
  std::vector<double> diverged_at;
};

enum class Monotonicity { increasing, decreasing, non_monotone, constant };

inline const char* monotonicity_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::non_monotone: return "non-monotone";
    case Monotonicity::constant: return "constant";
  }
  return "?";
}

struct MonotonicityVerdict {
  Monotonicity classification = Monotonicity::constant;
  std::vector<double> witness_points;
};

/// Uniform grid over [lo, hi] with breakpoint-adjacent points nudged off
/// the kinks by 1e-9.
inline std::vector<double> curve_grid(double lo, double hi, int n,
                                      const std::vector<double>& breakpoints = {}) {
  if (n < 2) throw std::invalid_argument("curve_grid: need at least two points");
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  for (double b : breakpoints)
    if (b > lo && b < hi) {
      g.push_back(b - 1e-9);
      g.push_back(b + 1e-9);
    }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

inline MonotonicityVerdict classify_monotonicity(const DynamicMeasureCurve& curve,
                                                 double tol = 1e-9) {
  if (curve.t_grid.size() < 8)
    throw std::invalid_argument("classify_monotonicity: need at least 8 grid points");
  MonotonicityVerdict v;
  double up_at = 0, down_at = 0;
  bool has_up = false, has_down = false;
  for (std::size_t i = 0; i + 1 < curve.values.size(); ++i) {
    const double d = curve.values[i + 1] - curve.values[i];
    if (d > tol && !has_up) {
      has_up = true;
      up_at = curve.t_grid[i];
    }
    if (d < -tol && !has_down) {
      has_down = true;
      down_at = curve.t_grid[i];
    }
  }
  if (has_up && has_down) {
    v.classification = Monotonicity::non_monotone;
    v.witness_points = {up_at, down_at};
  } else if (has_up) {
    v.classification = Monotonicity::increasing;
    v.witness_points = {up_at};
  } else if (has_down) {
    v.classification = Monotonicity::decreasing;
    v.witness_points = {down_at};
  }
  return v;
}

template <class Eval>
DynamicMeasureCurve evaluate_curve(const std::vector<double>& grid, Eval&& eval) {
  DynamicMeasureCurve c;
  for (double t : grid) {
    MeasureValue m = eval(t);
    if (m.diverged()) {
      c.diverged_at.push_back(t);
    } else {
      c.t_grid.push_back(t);
      c.values.push_back(m.value);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Model identities

/// Under survival_X = survival_Y ^ alpha: alpha * dcri(X,Y,t) = dcre(X,t).
inline PropositionReport proportional_hazards_identity(const DistributionHandle& X,
                                                       const DistributionHandle& Y, double alpha,
                                                       const std::vector<double>& t_grid,
                                                       const QuadratureConfig& cfg = {}) {
  PropositionReport rep;
  rep.proposition_id = "proportional_hazards_identity";
  rep.inputs = X.name + "," + Y.name + ";alpha=" + format_g9(alpha);
  rep.tolerance = 1e-6;
  double model_dev = 0.0;
  for (double t : t_grid)
    model_dev = std::max(model_dev, std::fabs(X.survival(t) - std::pow(Y.survival(t), alpha)));
  if (model_dev > 1e-9) {
    rep.precondition_ok = false;
    rep.note = "survival_X != survival_Y^alpha (max dev " + format_g9(model_dev) + ")";
    return rep;
  }
  double worst = 0.0;
  for (double t : t_grid) {
    auto lhs = dcri(X, Y, t, cfg);
    auto rhs = dcre(X, t, cfg);
    if (lhs.diverged() || rhs.diverged()) continue;
    const double dev = std::fabs(alpha * lhs.value - rhs.value);
    if (dev >= worst) {
      worst = dev;
      rep.lhs = alpha * lhs.value;
      rep.rhs = rhs.value;
    }
  }
  rep.margin = worst;
  rep.passed = worst <= rep.tolerance;
  rep.note = "asserts alpha*dcri = dcre; the 1/alpha factor is the numerically confirmed one";
  return rep;
}

/// Under cdf_X = cdf_Y ^ theta: theta * dcpi(X,Y,t) = dcpe(X,t).
inline PropositionReport proportional_reversed_hazards_identity(
    const DistributionHandle& X, const DistributionHandle& Y, double theta,
    const std::vector<double>& t_grid, const QuadratureConfig& cfg = {}) {
  PropositionReport rep;
  rep.proposition_id = "proportional_reversed_hazards_identity";
  rep.inputs = X.name + "," + Y.name + ";theta=" + format_g9(theta);
  rep.tolerance = 1e-6;
  double model_dev = 0.0;
  for (double t : t_grid)
    model_dev = std::max(model_dev, std::fabs(X.cdf(t) - std::pow(Y.cdf(t), theta)));
  if (model_dev > 1e-9) {
    rep.precondition_ok = false;
    rep.note = "cdf_X != cdf_Y^theta (max dev " + format_g9(model_dev) + ")";
    return rep;
  }
  double worst = 0.0;
  for (double t : t_grid) {
    auto lhs = dcpi(X, Y, t, cfg);
    auto rhs = dcpe(X, t, cfg);
    if (lhs.diverged() || rhs.diverged()) continue;
    const double dev = std::fabs(theta * lhs.value - rhs.value);
    if (dev >= worst) {
      worst = dev;
      rep.lhs = theta * lhs.value;
      rep.rhs = rhs.value;
    }
  }
  rep.margin = worst;
  rep.passed = worst <= rep.tolerance;
  rep.note = "asserts theta*dcpi = dcpe; the 1/theta factor is the numerically confirmed one";
  return rep;
}

/// dcri(aX+b, aY+b, t) = a*dcri(X, Y, (t-b)/a), and the same for dcpi.
inline PropositionReport linear_transform_identity(const DistributionHandle& X,
                                                   const DistributionHandle& Y, double a, double b,
                                                   double t, const QuadratureConfig& cfg = {}) {
  if (!(a > 0) || !(b >= 0) || !(t > b))
    throw std::invalid_argument("linear_transform_identity: needs a > 0, 0 <= b < t");
  PropositionReport rep;
  rep.proposition_id = "linear_transform_identity";
  rep.inputs = X.name + "," + Y.name + ";a=" + format_g9(a) + ",b=" + format_g9(b) +
               ",t=" + format_g9(t);
  rep.tolerance = 1e-6;
  auto Xa = affine_transform(X, a, b);
  auto Ya = affine_transform(Y, a, b);
  const double s = (t - b) / a;
  double worst = 0.0;
  {
    auto lhs = dcri(Xa, Ya, t, cfg);
    auto rhs = dcri(X, Y, s, cfg);
    if (!lhs.diverged() && !rhs.diverged()) {
      rep.lhs = lhs.value;
      rep.rhs = a * rhs.value;
      worst = std::fabs(rep.lhs - rep.rhs);
    }
  }
  if (Xa.cdf(t) > 0 && Ya.cdf(t) > 0 && X.cdf(s) > 0 && Y.cdf(s) > 0) {
    auto lhs = dcpi(Xa, Ya, t, cfg);
    auto rhs = dcpi(X, Y, s, cfg);
    if (!lhs.diverged() && !rhs.diverged())
      worst = std::max(worst, std::fabs(lhs.value - a * rhs.value));
  }
  rep.margin = worst;
  rep.passed = worst <= rep.tolerance;
  return rep;
}

/// For pairs symmetric about b/2 (F(x) = S(b-x), same for Y):
/// dcpi(X,Y,t) = dcri(X,Y,b-t).
inline PropositionReport symmetric_identity(const DistributionHandle& X,
                                            const DistributionHandle& Y, double b, double t,
                                            const QuadratureConfig& cfg = {}) {
  PropositionReport rep;
  rep.proposition_id = "symmetric_identity";
  rep.inputs = X.name + "," + Y.name + ";b=" + format_g9(b) + ",t=" + format_g9(t);
  rep.tolerance = 1e-6;
  double dev = 0.0;
  for (int i = 1; i < 64; ++i) {
    const double x = b * i / 64.0;
    dev = std::max(dev, std::fabs(X.cdf(x) - X.survival(b - x)));
    dev = std::max(dev, std::fabs(Y.cdf(x) - Y.survival(b - x)));
  }
  if (dev > 1e-9) {
    rep.precondition_ok = false;
    rep.note = "inputs not symmetric about b/2 (max dev " + format_g9(dev) + ")";
    return rep;
  }
  auto lhs = dcpi(X, Y, t, cfg);
  auto rhs = dcri(X, Y, b - t, cfg);
  rep.lhs = lhs.value;
  rep.rhs = rhs.value;
  rep.margin = std::fabs(lhs.value - rhs.value);
  rep.passed = !lhs.diverged() && !rhs.diverged() && rep.margin <= rep.tolerance;
  return rep;
}

// ---------------------------------------------------------------------------
// tau2 and its conditional-expectation route

/// tau2(x, t) = -int_x^t ln(F(u)/F(t)) du, nonnegative for x < t.
inline IntegralResult tau2(const DistributionHandle& X, double x, double t,
                           const QuadratureConfig& cfg = {}) {
  if (!(x >= 0) || !(x < t)) throw std::invalid_argument("tau2: needs 0 <= x < t");
  const double ft = X.cdf(t);
  if (!(ft > 0)) throw std::domain_error("tau2: cdf vanishes at t");
  auto integrand = [&X, ft](double u) {
    const double r = X.cdf(u) / ft;
    if (r <= 0.0) return inf;  // triggers the divergence path
    return -std::log(r);
  };
  return detail::integrate_measure(integrand, x, t, X.breakpoints, {}, cfg);
}

/// E[tau2_X(Y, t) | Y <= t]; equals dcpi(Y, X, t).
inline MeasureValue dcpi_as_conditional_expectation(const DistributionHandle& X,
                                                    const DistributionHandle& Y, double t,
                                                    const QuadratureConfig& cfg = {}) {
  if (!Y.has_density())
    throw capability_error("dcpi_as_conditional_expectation: density of Y required");
  const double gt = Y.cdf(t);
  if (!(gt > 0)) throw std::domain_error("dcpi_as_conditional_expectation: cdf_Y vanishes at t");
  auto integrand = [&X, &Y, t, gt, &cfg](double u) {
    const double gu = Y.density(u);
    if (gu <= 0.0) return 0.0;
    if (u >= t) return 0.0;
    auto inner = tau2(X, u, t, cfg);
    if (inner.diverged) throw evaluation_error(u);
    return (gu / gt) * inner.value;
  };
  auto r = detail::integrate_measure(integrand, std::max(0.0, Y.lo), t,
                                     detail::merged_breakpoints(X, Y), {}, cfg);
  return detail::tag("dcpi_expectation", Y.name + "," + X.name + ";t=" + format_g9(t), r);
}

/// Identity dcpi(Y,X,t) = dcpe(X,t) + E[ln(F(Z_t)/F(t))] * (mu_Y(t) - mu_X(t)),
/// where Z_t has density (F/F(t) - G/G(t)) / (mu_Y(t) - mu_X(t)) on (0,t).
/// Requires X below Y in reversed hazard rate order and mu_X(t) < mu_Y(t).
inline PropositionReport zt_identity(const DistributionHandle& X, const DistributionHandle& Y,
                                     double t, const QuadratureConfig& cfg = {}) {
  PropositionReport rep;
  rep.proposition_id = "zt_identity";
  rep.inputs = X.name + "," + Y.name + ";t=" + format_g9(t);
  rep.tolerance = 1e-6;
  if (!X.has_density() || !Y.has_density())
    throw capability_error("zt_identity: densities required");
  // rh dominance on a grid: rev_hazard_X <= rev_hazard_Y where both cdfs positive.
  for (int i = 1; i <= 128; ++i) {
    const double x = t * i / 129.0;
    const double fx = X.cdf(x), gx = Y.cdf(x);
    if (!(fx > 0) || !(gx > 0)) continue;
    const double pf = X.density(x) / fx, pg = Y.density(x) / gx;
    if (pf > pg + 1e-9) {
      rep.precondition_ok = false;
      rep.note = "reversed hazard order violated at x=" + format_g9(x);
      return rep;
    }
  }
  const double mux = truncated_mean(X, t, cfg);
  const double muy = truncated_mean(Y, t, cfg);
  if (!(mux < muy - 1e-12)) {
    rep.precondition_ok = false;
    rep.note = "requires mu_X(t) < mu_Y(t)";
    return rep;
  }
  const double ft = X.cdf(t), gt = Y.cdf(t), gap = muy - mux;
  auto fz = [&](double x) { return (X.cdf(x) / ft - Y.cdf(x) / gt) / gap; };
  auto norm = detail::integrate_measure(fz, std::min(X.lo, Y.lo), t,
                                        detail::merged_breakpoints(X, Y), {}, cfg);
  if (std::fabs(norm.value - 1.0) > 1e-8) {
    rep.precondition_ok = false;
    rep.note = "Z_t density fails to normalize: " + format_g9(norm.value);
    return rep;
  }
  auto mean_term = detail::integrate_measure(
      [&](double x) {
        const double w = fz(x);
        if (w == 0.0) return 0.0;
        const double r = X.cdf(x) / ft;
        if (r <= 0.0) throw evaluation_error(x);
        return w * std::log(r);
      },
      std::min(X.lo, Y.lo), t, detail::merged_breakpoints(X, Y), {}, cfg);
  auto lhs = dcpi(Y, X, t, cfg);
  auto base = dcpe(X, t, cfg);
  rep.lhs = lhs.value;
  rep.rhs = base.value + mean_term.value * gap;
  rep.margin = std::fabs(rep.lhs - rep.rhs);
  rep.passed = !lhs.diverged() && !base.diverged() && !mean_term.diverged &&
               rep.margin <= rep.tolerance;
  return rep;
}

}  // namespace cumres
