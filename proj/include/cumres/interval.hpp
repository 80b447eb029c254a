#pragma once

// Doubly truncated measures on a window (t1, t2): interval inaccuracy,
// interval cumulative residual/past entropy and inaccuracy, general
// failure rates, the Lambda2/T2 decompositions, the partial derivative
// in t1, and the monotone-transformation sandwich.

#include <cmath>
#include <string>

#include "cumres/dynamic.hpp"

namespace cumres {

struct TruncationWindow {
  double t1 = 0.0;
  double t2 = inf;
};

/// Raised when a window carries no probability mass for a distribution.
struct window_error : std::domain_error {
  using std::domain_error::domain_error;
};

inline void check_window(const DistributionHandle& d, const TruncationWindow& w) {
  if (!(w.t1 < w.t2)) throw window_error("window: requires t1 < t2");
  if (!(d.cdf(w.t2) > d.cdf(w.t1)))
    throw window_error("window (" + format_g9(w.t1) + "," + format_g9(w.t2) +
                       ") carries no mass of " + d.name);
}

struct GfrPair {
  double h1 = 0.0;
  double h2 = 0.0;
};

inline GfrPair gfr(const DistributionHandle& X, const TruncationWindow& w) {
  check_window(X, w);
  if (!X.has_density()) throw capability_error("gfr: density required");
  const double mass = X.cdf(w.t2) - X.cdf(w.t1);
  return {X.density(w.t1) / mass, X.density(w.t2) / mass};
}

namespace detail {

inline std::string window_inputs(const std::string& names, const TruncationWindow& w) {
  return names + ";w=(" + format_g9(w.t1) + "," + format_g9(w.t2) + ")";
}

inline std::vector<double> window_splits(const std::vector<double>& bps, double lo, double hi) {
  std::vector<double> s;
  for (double b : bps)
    if (b > lo && b < hi) s.push_back(b);
  return s;
}

}  // namespace detail

/// -int (f/dF) ln(g/dG) over the window.
inline MeasureValue interval_inaccuracy(const DistributionHandle& X, const DistributionHandle& Y,
                                        const TruncationWindow& w,
                                        const QuadratureConfig& cfg = {}) {
  check_window(X, w);
  check_window(Y, w);
  if (!X.has_density() || !Y.has_density())
    throw capability_error("interval_inaccuracy: densities required");
  const double df = X.cdf(w.t2) - X.cdf(w.t1);
  const double dg = Y.cdf(w.t2) - Y.cdf(w.t1);
  auto integrand = [&X, &Y, df, dg](double x) {
    return -xlogy(X.density(x) / df, Y.density(x) / dg);
  };
  auto r = detail::integrate_measure(integrand, w.t1, std::min(w.t2, X.hi),
                                     detail::window_splits(detail::merged_breakpoints(X, Y), w.t1,
                                                           std::min(w.t2, X.hi)),
                                     X.survival, cfg);
  return detail::tag("interval_inaccuracy", detail::window_inputs(X.name + "," + Y.name, w), r);
}

/// -int (S/dS) ln(S/dS), dS = S(t1) - S(t2).
inline MeasureValue icre(const DistributionHandle& X, const TruncationWindow& w,
                         const QuadratureConfig& cfg = {}) {
  check_window(X, w);
  const double ds = X.survival(w.t1) - X.survival(w.t2);
  auto integrand = [&X, ds](double x) {
    const double u = X.survival(x) / ds;
    return -xlogy(u, u);
  };
  const double hi = std::min(w.t2, X.hi);
  auto r = detail::integrate_measure(integrand, w.t1, hi,
                                     detail::window_splits(X.breakpoints, w.t1, hi), X.survival,
                                     cfg);
  return detail::tag("icre", detail::window_inputs(X.name, w), r);
}

/// -int (F/dF) ln(F/dF), dF = F(t2) - F(t1).
inline MeasureValue icpe(const DistributionHandle& X, const TruncationWindow& w,
                         const QuadratureConfig& cfg = {}) {
  check_window(X, w);
  const double df = X.cdf(w.t2) - X.cdf(w.t1);
  auto integrand = [&X, df](double x) {
    const double u = X.cdf(x) / df;
    return -xlogy(u, u);
  };
  const double lo = std::max(w.t1, X.lo);
  auto r = detail::integrate_measure(integrand, lo, std::min(w.t2, X.hi),
                                     detail::window_splits(X.breakpoints, lo, w.t2), X.survival,
                                     cfg);
  return detail::tag("icpe", detail::window_inputs(X.name, w), r);
}

/// -int (S_X/dS_X) ln(S_Y/dS_Y).
inline MeasureValue icri(const DistributionHandle& X, const DistributionHandle& Y,
                         const TruncationWindow& w, const QuadratureConfig& cfg = {}) {
  check_window(X, w);
  check_window(Y, w);
  const std::string inputs = detail::window_inputs(X.name + "," + Y.name, w);
  if (std::min(w.t2, X.hi) > Y.hi + 1e-12)
    return detail::tag("icri", inputs, {0.0, 0.0, false, true});
  const double dsx = X.survival(w.t1) - X.survival(w.t2);
  const double dsy = Y.survival(w.t1) - Y.survival(w.t2);
  const double ldsy = std::log(dsy);
  auto integrand = [&X, &Y, dsx, ldsy](double x) {
    return -weighted_log(X.survival(x) / dsx, Y.ln_survival(x) - ldsy);
  };
  const double hi = std::min(w.t2, X.hi);
  auto r = detail::integrate_measure(integrand, w.t1, hi,
                                     detail::window_splits(detail::merged_breakpoints(X, Y), w.t1,
                                                           hi),
                                     X.survival, cfg);
  return detail::tag("icri", inputs, r);
}

/// -int (F_X/dF_X) ln(G_Y/dG_Y).
inline MeasureValue icpi(const DistributionHandle& X, const DistributionHandle& Y,
                         const TruncationWindow& w, const QuadratureConfig& cfg = {}) {
  check_window(X, w);
  check_window(Y, w);
  const std::string inputs = detail::window_inputs(X.name + "," + Y.name, w);
  const double df = X.cdf(w.t2) - X.cdf(w.t1);
  const double dg = Y.cdf(w.t2) - Y.cdf(w.t1);
  const double ldg = std::log(dg);
  auto integrand = [&X, &Y, df, ldg](double x) {
    return -weighted_log(X.cdf(x) / df, Y.ln_cdf(x) - ldg);
  };
  const double lo = std::max(w.t1, X.lo);
  auto r = detail::integrate_measure(integrand, lo, std::min(w.t2, std::max(X.hi, Y.hi)),
                                     detail::window_splits(detail::merged_breakpoints(X, Y), lo,
                                                           w.t2),
                                     Y.survival, cfg);
  return detail::tag("icpi", inputs, r);
}

// ---------------------------------------------------------------------------
// Decompositions

/// Dual-route check: icri against its Lambda2/GCM decomposition, icpi
/// against its T2/GCM decomposition (with the sign-corrected boundary
/// bracket for the past version).
inline PropositionReport icri_decomposition(const DistributionHandle& X,
                                            const DistributionHandle& Y,
                                            const TruncationWindow& w,
                                            const QuadratureConfig& cfg = {}) {
  if (!std::isfinite(w.t2))
    throw std::invalid_argument("icri_decomposition: finite window required");
  if (!X.has_density()) throw capability_error("icri_decomposition: density of X required");
  PropositionReport rep;
  rep.proposition_id = "interval_decomposition";
  rep.inputs = detail::window_inputs(X.name + "," + Y.name, w);
  rep.tolerance = 1e-7;
  check_window(X, w);
  check_window(Y, w);

  const double t1 = w.t1, t2 = w.t2;
  const double sx1 = X.survival(t1), sx2 = X.survival(t2);
  const double fx1 = X.cdf(t1), fx2 = X.cdf(t2);
  const double dsx = sx1 - sx2, dfx = fx2 - fx1;
  const double dsy = Y.survival(t1) - Y.survival(t2);
  const double dgy = Y.cdf(t2) - Y.cdf(t1);
  const double mx = general_conditional_mean(X, t1, t2, cfg);

  auto lambda2 = [&Y, &cfg](double a, double b) {
    auto r = detail::integrate_measure([&Y](double x) { return -Y.ln_survival(x); }, a, b,
                                       detail::window_splits(Y.breakpoints, a, b), {}, cfg);
    if (r.diverged) throw evaluation_error(a);
    return r.value;
  };
  auto t2fn = [&Y, &cfg](double a, double b) {
    auto r = detail::integrate_measure([&Y](double x) { return -Y.ln_cdf(x); }, a, b,
                                       detail::window_splits(Y.breakpoints, a, b), {}, cfg);
    if (r.diverged) throw evaluation_error(a);
    return r.value;
  };

  // Residual route.
  const double res_expect =
      detail::integrate_measure(
          [&](double u) {
            const double fu = X.density(u);
            return fu <= 0.0 ? 0.0 : fu * lambda2(t1, u);
          },
          t1, t2, detail::window_splits(detail::merged_breakpoints(X, Y), t1, t2), {}, cfg)
          .value /
      dfx;
  const double icri_alt = (sx2 / dsx) * lambda2(t1, t2) + res_expect +
                          std::log(dsy) * (mx + (t2 * sx2 - t1 * sx1) / dsx);
  const double icri_direct = icri(X, Y, w, cfg).value;
  rep.lhs = icri_direct;
  rep.rhs = icri_alt;
  double worst = std::fabs(icri_direct - icri_alt);

  // Past route (boundary bracket carries -m_X).
  const double past_expect =
      detail::integrate_measure(
          [&](double u) {
            const double fu = X.density(u);
            return fu <= 0.0 ? 0.0 : fu * t2fn(u, t2);
          },
          std::max(t1, X.lo), t2,
          detail::window_splits(detail::merged_breakpoints(X, Y), t1, t2), {}, cfg)
          .value /
      dfx;
  const double icpi_alt = (fx1 / dfx) * t2fn(t1, t2) + past_expect +
                          std::log(dgy) * ((t2 * fx2 - t1 * fx1) / dfx - mx);
  const double icpi_direct = icpi(X, Y, w, cfg).value;
  worst = std::max(worst, std::fabs(icpi_direct - icpi_alt));

  rep.margin = worst;
  rep.passed = worst <= rep.tolerance;
  rep.note = "max deviation over the residual and past dual routes";
  return rep;
}

/// Central finite difference of icri in t1 (one-sided is not needed for
/// the smooth catalogue; the printed closed form is not used).
inline double icri_partial_t1(const DistributionHandle& X, const DistributionHandle& Y,
                              const TruncationWindow& w, const QuadratureConfig& cfg = {}) {
  const double h = 1e-5 * std::max(1.0, std::fabs(w.t1));
  auto lo = icri(X, Y, {w.t1 - h, w.t2}, cfg);
  auto hi = icri(X, Y, {w.t1 + h, w.t2}, cfg);
  if (lo.diverged() || hi.diverged())
    throw capability_error("icri_partial_t1: measure diverges near t1");
  return (hi.value - lo.value) / (2.0 * h);
}

// ---------------------------------------------------------------------------
// Monotone transformation sandwich

/// For increasing phi with a <= phi' <= b:
///   b*icri(X,Y,(u1,u2)) <= icri(phi(X),phi(Y),(t1,t2)) <= a*icri(X,Y,(u1,u2)),
/// where ui = phi^{-1}(ti). For decreasing phi with a <= -phi' <= b the base
/// quantity is icpi(X,Y,(u2,u1)). a = b gives the scale equality.
inline PropositionReport monotone_transform_bounds(
    const DistributionHandle& X, const DistributionHandle& Y,
    const std::function<double(double)>& phi, const std::function<double(double)>& phi_inverse,
    const std::function<double(double)>& phi_derivative, double a, double b, bool increasing,
    const TruncationWindow& w, const QuadratureConfig& cfg = {}) {
  PropositionReport rep;
  rep.proposition_id = "monotone_transform_bounds";
  rep.inputs = detail::window_inputs(X.name + "," + Y.name, w) + ";a=" + format_g9(a) +
               ",b=" + format_g9(b);
  rep.tolerance = 1e-7;
  const double u_lo = increasing ? phi_inverse(w.t1) : phi_inverse(w.t2);
  const double u_hi = increasing ? phi_inverse(w.t2) : phi_inverse(w.t1);
  for (int i = 0; i <= 64; ++i) {
    const double u = u_lo + (u_hi - u_lo) * i / 64.0;
    const double d = std::fabs(phi_derivative(u));
    if (d < a - 1e-9 || d > b + 1e-9) {
      rep.precondition_ok = false;
      rep.note = "derivative bound violated at u=" + format_g9(u);
      return rep;
    }
  }
  auto Xp = monotone_transform(X, phi, phi_inverse, phi_derivative, increasing);
  auto Yp = monotone_transform(Y, phi, phi_inverse, phi_derivative, increasing);
  auto mid = icri(Xp, Yp, w, cfg);
  MeasureValue base = increasing ? icri(X, Y, {u_lo, u_hi}, cfg)
                                 : icpi(X, Y, {u_lo, u_hi}, cfg);
  if (mid.diverged() || base.diverged()) {
    rep.precondition_ok = false;
    rep.note = "divergent measure";
    return rep;
  }
  rep.lhs = mid.value;
  rep.rhs = base.value;
  rep.margin = std::min(mid.value - b * base.value, a * base.value - mid.value);
  rep.passed = rep.margin >= -rep.tolerance;
  rep.note = increasing ? "sandwich b*base <= transformed <= a*base"
                        : "decreasing case against the past-interval base";
  return rep;
}

}  // namespace cumres
