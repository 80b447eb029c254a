#pragma once

// Static (untruncated) information measures over lifetime distributions:
// Shannon entropy, Kerridge inaccuracy, cumulative residual/past entropy
// and inaccuracy, KL divergence, the cumulative-hazard transforms and the
// expectation routes built on them, equilibrium identities, and the
// inaccuracy ratios.

#include <cmath>
#include <optional>
#include <string>

#include "cumres/distribution.hpp"
#include "cumres/report.hpp"

namespace cumres {

namespace detail {

/// Integral over [lo, hi] (hi possibly infinite) that maps integrand blowups
/// to a diverged result instead of an exception.
inline IntegralResult integrate_measure(const std::function<double(double)>& f, double lo,
                                        double hi, std::vector<double> splits,
                                        const std::function<double(double)>& envelope,
                                        const QuadratureConfig& cfg) {
  try {
    if (std::isfinite(hi)) return integrate_finite_split(f, lo, hi, splits, cfg);
    std::sort(splits.begin(), splits.end());
    double from = lo;
    IntegralResult out{0.0, 0.0, true, false};
    if (!splits.empty() && splits.back() > lo) {
      out = integrate_finite_split(f, lo, splits.back(), splits, cfg);
      from = splits.back();
    }
    auto tail = integrate_semi_infinite(f, from, envelope, cfg);
    out.value += tail.value;
    out.error_estimate += tail.error_estimate;
    out.converged = out.converged && tail.converged;
    out.diverged = out.diverged || tail.diverged;
    if (out.diverged) return {0.0, 0.0, false, true};
    return out;
  } catch (const evaluation_error&) {
    return {0.0, 0.0, false, true};
  }
}

inline std::vector<double> merged_breakpoints(const DistributionHandle& X,
                                              const DistributionHandle& Y) {
  std::vector<double> b = X.breakpoints;
  b.insert(b.end(), Y.breakpoints.begin(), Y.breakpoints.end());
  if (std::isfinite(X.lo) && X.lo > 0) b.push_back(X.lo);
  if (std::isfinite(Y.lo) && Y.lo > 0) b.push_back(Y.lo);
  if (std::isfinite(X.hi)) b.push_back(X.hi);
  if (std::isfinite(Y.hi)) b.push_back(Y.hi);
  std::sort(b.begin(), b.end());
  return b;
}

inline MeasureValue tag(std::string name, std::string inputs, IntegralResult r) {
  MeasureValue m;
  m.name = std::move(name);
  m.inputs = std::move(inputs);
  m.result = r;
  m.value = r.diverged ? 0.0 : r.value;
  return m;
}

}  // namespace detail

/// H(X) = -int f ln f.
inline MeasureValue shannon_entropy(const DistributionHandle& X,
                                    const QuadratureConfig& cfg = {}) {
  if (!X.has_density()) throw capability_error("shannon_entropy: no density on " + X.name);
  auto integrand = [&X](double x) { return -xlogy(X.density(x), X.density(x)); };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, X.breakpoints, X.survival, cfg);
  return detail::tag("shannon", X.name, r);
}

/// H_{X,Y} = -int f ln g; diverges when g vanishes where f > 0.
inline MeasureValue kerridge_inaccuracy(const DistributionHandle& X, const DistributionHandle& Y,
                                        const QuadratureConfig& cfg = {}) {
  if (!X.has_density() || !Y.has_density())
    throw capability_error("kerridge_inaccuracy: both densities required");
  auto integrand = [&X, &Y](double x) { return -xlogy(X.density(x), Y.density(x)); };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, detail::merged_breakpoints(X, Y),
                                     X.survival, cfg);
  return detail::tag("kerridge", X.name + "," + Y.name, r);
}

/// Cumulative residual entropy -int survival ln survival.
inline MeasureValue cre(const DistributionHandle& X, const QuadratureConfig& cfg = {}) {
  auto integrand = [&X](double x) { return -xlogy(X.survival(x), X.survival(x)); };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, X.breakpoints, X.survival, cfg);
  return detail::tag("cre", X.name, r);
}

/// Cumulative past entropy -int cdf ln cdf.
inline MeasureValue cpe(const DistributionHandle& X, const QuadratureConfig& cfg = {}) {
  auto integrand = [&X](double x) { return -xlogy(X.cdf(x), X.cdf(x)); };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, X.breakpoints, X.survival, cfg);
  return detail::tag("cpe", X.name, r);
}

/// Cumulative residual inaccuracy -int survival_X ln survival_Y.
inline MeasureValue cri(const DistributionHandle& X, const DistributionHandle& Y,
                        const QuadratureConfig& cfg = {}) {
  const std::string inputs = X.name + "," + Y.name;
  // X outliving Y's support puts positive survival mass where ln vanishes.
  if (X.hi > Y.hi + 1e-12) return detail::tag("cri", inputs, {0.0, 0.0, false, true});
  auto integrand = [&X, &Y](double x) { return -weighted_log(X.survival(x), Y.ln_survival(x)); };
  const double lo = std::min(X.lo, Y.lo);
  auto r = detail::integrate_measure(integrand, lo, X.hi, detail::merged_breakpoints(X, Y),
                                     X.survival, cfg);
  return detail::tag("cri", inputs, r);
}

/// Cumulative past inaccuracy -int cdf_X ln cdf_Y.
inline MeasureValue cpi(const DistributionHandle& X, const DistributionHandle& Y,
                        const QuadratureConfig& cfg = {}) {
  const std::string inputs = X.name + "," + Y.name;
  if (Y.lo > X.lo + 1e-12) return detail::tag("cpi", inputs, {0.0, 0.0, false, true});
  auto integrand = [&X, &Y](double x) { return -weighted_log(X.cdf(x), Y.ln_cdf(x)); };
  auto r = detail::integrate_measure(integrand, X.lo, Y.hi, detail::merged_breakpoints(X, Y),
                                     Y.survival, cfg);
  return detail::tag("cpi", inputs, r);
}

/// KL(X||Y) = int f ln(f/g), standard nonnegative convention.
inline MeasureValue kl_divergence(const DistributionHandle& X, const DistributionHandle& Y,
                                  const QuadratureConfig& cfg = {}) {
  if (!X.has_density() || !Y.has_density())
    throw capability_error("kl_divergence: both densities required");
  auto integrand = [&X, &Y](double x) {
    const double fx = X.density(x);
    if (fx <= 0.0) return 0.0;
    return fx * std::log(fx / Y.density(x));
  };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, detail::merged_breakpoints(X, Y),
                                     X.survival, cfg);
  return detail::tag("kl", X.name + "," + Y.name, r);
}

// ---------------------------------------------------------------------------
// Cumulative hazard transforms

struct CumulativeHazardTransforms {
  std::function<IntegralResult(double)> R2;  // -int_0^x ln survival
  std::function<IntegralResult(double)> T2;  // -int_x^hi ln cdf
};

inline CumulativeHazardTransforms cumulative_hazard_transforms(const DistributionHandle& Y,
                                                               const QuadratureConfig& cfg = {}) {
  auto base = std::make_shared<DistributionHandle>(Y);
  CumulativeHazardTransforms t;
  t.R2 = [base, cfg](double x) -> IntegralResult {
    if (x <= base->lo && x <= 0) return {0.0, 0.0, true, false};
    auto integrand = [base](double u) { return -base->ln_survival(u); };
    return detail::integrate_measure(integrand, 0.0, x, base->breakpoints, {}, cfg);
  };
  t.T2 = [base, cfg](double x) -> IntegralResult {
    auto integrand = [base](double u) { return -base->ln_cdf(u); };
    if (std::isfinite(base->hi) && x >= base->hi) return {0.0, 0.0, true, false};
    std::vector<double> splits;
    for (double b : base->breakpoints)
      if (b > x) splits.push_back(b);
    if (std::isfinite(base->lo) && base->lo > x) splits.push_back(base->lo);
    return detail::integrate_measure(integrand, x, base->hi, splits, base->survival, cfg);
  };
  return t;
}

/// cri via the expectation route E[R2_Y(X)].
inline MeasureValue cri_as_expectation(const DistributionHandle& X, const DistributionHandle& Y,
                                       const QuadratureConfig& cfg = {}) {
  if (!X.has_density()) throw capability_error("cri_as_expectation: density of X required");
  auto t = cumulative_hazard_transforms(Y, cfg);
  auto integrand = [&X, &t](double x) {
    const double fx = X.density(x);
    if (fx <= 0.0) return 0.0;
    auto inner = t.R2(x);
    if (inner.diverged) throw evaluation_error(x);
    return fx * inner.value;
  };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, detail::merged_breakpoints(X, Y),
                                     X.survival, cfg);
  return detail::tag("cri_expectation", X.name + "," + Y.name, r);
}

/// cpi via the expectation route E[T2_Y(X)].
inline MeasureValue cpi_as_expectation(const DistributionHandle& X, const DistributionHandle& Y,
                                       const QuadratureConfig& cfg = {}) {
  if (!X.has_density()) throw capability_error("cpi_as_expectation: density of X required");
  auto t = cumulative_hazard_transforms(Y, cfg);
  auto integrand = [&X, &t](double x) {
    const double fx = X.density(x);
    if (fx <= 0.0) return 0.0;
    auto inner = t.T2(x);
    if (inner.diverged) throw evaluation_error(x);
    return fx * inner.value;
  };
  auto r = detail::integrate_measure(integrand, X.lo, X.hi, detail::merged_breakpoints(X, Y),
                                     X.survival, cfg);
  return detail::tag("cpi_expectation", X.name + "," + Y.name, r);
}

// ---------------------------------------------------------------------------
// Equilibrium identities

/// Checks cre(X) = E(X)(H(X_e) - ln E(X)); with Y also
/// cri(X,Y) = E(X)(H_{Xe,Ye} - ln E(Y)) and
/// KL(X_e,Y_e) = ln(E(Y)/E(X)) + (cri - cre)/E(X).
inline PropositionReport equilibrium_identity_check(const DistributionHandle& X,
                                                    const DistributionHandle* Y = nullptr,
                                                    const QuadratureConfig& cfg = {}) {
  if (!X.mean || !(*X.mean > 0))
    throw capability_error("equilibrium_identity_check: finite positive mean required");
  PropositionReport rep;
  rep.proposition_id = "equilibrium_identity";
  rep.inputs = Y ? X.name + "," + Y->name : X.name;
  rep.tolerance = 1e-6;

  const double EX = *X.mean;
  auto Xe = equilibrium(X, cfg);
  const double eps = cre(X, cfg).value;
  const double lhs1 = eps;
  const double rhs1 = EX * (shannon_entropy(Xe, cfg).value - std::log(EX));
  double worst = std::fabs(lhs1 - rhs1);
  rep.lhs = lhs1;
  rep.rhs = rhs1;

  if (Y) {
    if (!Y->mean || !(*Y->mean > 0))
      throw capability_error("equilibrium_identity_check: finite positive mean required");
    const double EY = *Y->mean;
    auto Ye = equilibrium(*Y, cfg);
    const double ch = cri(X, *Y, cfg).value;
    const double rhs2 = EX * (kerridge_inaccuracy(Xe, Ye, cfg).value - std::log(EY));
    worst = std::max(worst, std::fabs(ch - rhs2));
    const double kl_e = kl_divergence(Xe, Ye, cfg).value;
    const double rhs3 = std::log(EY / EX) + (ch - eps) / EX;
    worst = std::max(worst, std::fabs(kl_e - rhs3));
    rep.note = "entropy, inaccuracy and KL equilibrium identities; margin is the worst of the three";
  } else {
    rep.note = "entropy equilibrium identity";
  }
  rep.margin = worst;
  rep.passed = worst <= rep.tolerance;
  return rep;
}

// ---------------------------------------------------------------------------
// Ratios

inline std::optional<double> crir(const DistributionHandle& X, const DistributionHandle& Y,
                                  const QuadratureConfig& cfg = {}) {
  auto denom = cre(X, cfg);
  auto numer = cri(X, Y, cfg);
  if (denom.diverged() || numer.diverged() || !(denom.value > 0)) return std::nullopt;
  return numer.value / denom.value;
}

inline std::optional<double> cpir(const DistributionHandle& X, const DistributionHandle& Y,
                                  const QuadratureConfig& cfg = {}) {
  auto denom = cpe(X, cfg);
  auto numer = cpi(X, Y, cfg);
  if (denom.diverged() || numer.diverged() || !(denom.value > 0)) return std::nullopt;
  return numer.value / denom.value;
}

}  // namespace cumres
