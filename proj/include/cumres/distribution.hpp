#pragma once

// Lifetime distribution abstraction: an immutable bundle of evaluators
// (cdf, survival, density) plus support, mean and kink locations, with a
// catalogue of parametric, piecewise-survival and empirical constructors
// and the derived reliability functionals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cumres/quadrature.hpp"
#include "cumres/special.hpp"

namespace cumres {

/// Raised when a handle lacks the capability an operation needs
/// (no density, infinite mean, ...).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistributionHandle {
  std::string name;
  std::function<double(double)> cdf;
  std::function<double(double)> survival;
  std::function<double(double)> density;  // empty when unavailable
  // Optional exact logarithms; keep log-weighted integrands finite where the
  // plain survival/cdf underflow to zero in the far tails.
  std::function<double(double)> log_survival;
  std::function<double(double)> log_cdf;
  double lo = 0.0;
  double hi = inf;
  std::optional<double> mean;  // nullopt: infinite or undefined
  std::vector<double> breakpoints;  // interior kinks; quadrature splits here

  bool has_density() const { return static_cast<bool>(density); }
  bool bounded() const { return std::isfinite(hi); }
  double ln_survival(double x) const {
    return log_survival ? log_survival(x) : std::log(survival(x));
  }
  double ln_cdf(double x) const { return log_cdf ? log_cdf(x) : std::log(cdf(x)); }
};

/// w * ln_v with the 0 * (-inf) = 0 convention of the measure integrands.
inline double weighted_log(double w, double ln_v) { return w == 0.0 ? 0.0 : w * ln_v; }

// ---------------------------------------------------------------------------
// Specs

enum class Family { exponential, weibull, gamma, erlang, pareto1, uniform, smoothstep };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::exponential: return "exponential";
    case Family::weibull: return "weibull";
    case Family::gamma: return "gamma";
    case Family::erlang: return "erlang";
    case Family::pareto1: return "pareto1";
    case Family::uniform: return "uniform";
    case Family::smoothstep: return "smoothstep";
  }
  return "?";
}

inline Family family_from_name(const std::string& s) {
  if (s == "exponential") return Family::exponential;
  if (s == "weibull") return Family::weibull;
  if (s == "gamma") return Family::gamma;
  if (s == "erlang") return Family::erlang;
  if (s == "pareto1") return Family::pareto1;
  if (s == "uniform") return Family::uniform;
  if (s == "smoothstep") return Family::smoothstep;
  throw std::invalid_argument("unknown distribution family: " + s);
}

struct ParametricSpec {
  Family family;
  std::vector<double> params;
};

struct SurvivalSegment {
  enum class Kind { constant, exp_affine, power };
  Kind kind = Kind::constant;
  // constant:   S(x) = c
  // exp_affine: S(x) = exp(a + b*x)
  // power:      S(x) = c * x^p
  double c = 1.0, a = 0.0, b = 0.0, p = 0.0;
};

struct PiecewiseSurvival {
  std::vector<double> breakpoints;        // strictly increasing, all > 0
  std::vector<SurvivalSegment> segments;  // breakpoints.size() + 1 entries
  bool allow_jumps = false;
};

struct EmpiricalDistribution {
  std::vector<double> samples;  // sorted, nonnegative, n >= 2
};

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline double segment_value(const SurvivalSegment& s, double x) {
  switch (s.kind) {
    case SurvivalSegment::Kind::constant: return s.c;
    case SurvivalSegment::Kind::exp_affine: return std::exp(s.a + s.b * x);
    case SurvivalSegment::Kind::power: return s.c * std::pow(x, s.p);
  }
  return 0.0;
}

inline double segment_log_value(const SurvivalSegment& s, double x) {
  switch (s.kind) {
    case SurvivalSegment::Kind::constant: return std::log(s.c);
    case SurvivalSegment::Kind::exp_affine: return s.a + s.b * x;
    case SurvivalSegment::Kind::power: return std::log(s.c) + s.p * std::log(x);
  }
  return -inf;
}

inline double segment_density(const SurvivalSegment& s, double x) {
  // f = -S'
  switch (s.kind) {
    case SurvivalSegment::Kind::constant: return 0.0;
    case SurvivalSegment::Kind::exp_affine: return -s.b * std::exp(s.a + s.b * x);
    case SurvivalSegment::Kind::power: return -s.c * s.p * std::pow(x, s.p - 1.0);
  }
  return 0.0;
}

}  // namespace detail

inline DistributionHandle make_distribution(const ParametricSpec& spec) {
  using detail::require;
  const auto& p = spec.params;
  DistributionHandle d;
  switch (spec.family) {
    case Family::exponential: {
      require(p.size() == 1 && p[0] > 0, "exponential: needs one positive rate");
      const double l = p[0];
      d.name = "exponential(" + std::to_string(l) + ")";
      d.survival = [l](double x) { return x <= 0 ? 1.0 : std::exp(-l * x); };
      d.cdf = [l](double x) { return x <= 0 ? 0.0 : -std::expm1(-l * x); };
      d.density = [l](double x) { return x < 0 ? 0.0 : l * std::exp(-l * x); };
      d.log_survival = [l](double x) { return x <= 0 ? 0.0 : -l * x; };
      d.mean = 1.0 / l;
      break;
    }
    case Family::weibull: {
      require(p.size() == 2 && p[0] > 0 && p[1] > 0, "weibull: needs positive scale and shape");
      const double s = p[0], r = p[1];
      d.name = "weibull(" + std::to_string(s) + "," + std::to_string(r) + ")";
      d.survival = [s, r](double x) { return x <= 0 ? 1.0 : std::exp(-std::pow(x / s, r)); };
      d.cdf = [s, r](double x) { return x <= 0 ? 0.0 : -std::expm1(-std::pow(x / s, r)); };
      d.density = [s, r](double x) {
        if (x <= 0) return 0.0;
        const double u = std::pow(x / s, r);
        return (r / x) * u * std::exp(-u);
      };
      d.log_survival = [s, r](double x) { return x <= 0 ? 0.0 : -std::pow(x / s, r); };
      d.mean = s * std::tgamma(1.0 + 1.0 / r);
      break;
    }
    case Family::gamma: {
      require((p.size() == 1 || p.size() == 2) && p[0] > 0, "gamma: needs positive shape [,rate]");
      const double k = p[0];
      const double l = p.size() == 2 ? p[1] : 1.0;
      require(l > 0, "gamma: rate must be positive");
      d.name = "gamma(" + std::to_string(k) + "," + std::to_string(l) + ")";
      d.cdf = [k, l](double x) { return x <= 0 ? 0.0 : gamma_p(k, l * x); };
      d.survival = [k, l](double x) { return x <= 0 ? 1.0 : gamma_q(k, l * x); };
      d.density = [k, l](double x) {
        if (x <= 0) return 0.0;
        return std::exp(k * std::log(l) + (k - 1.0) * std::log(x) - l * x - std::lgamma(k));
      };
      d.mean = k / l;
      break;
    }
    case Family::erlang: {
      require(p.size() == 2 && p[0] >= 1 && p[0] == std::floor(p[0]) && p[1] > 0,
              "erlang: needs integer shape >= 1 and positive rate");
      const int k = static_cast<int>(p[0]);
      const double l = p[1];
      d.name = "erlang(" + std::to_string(k) + "," + std::to_string(l) + ")";
      d.survival = [k, l](double x) {
        if (x <= 0) return 1.0;
        double term = 1.0, sum = 1.0;
        for (int j = 1; j < k; ++j) {
          term *= l * x / j;
          sum += term;
        }
        return sum * std::exp(-l * x);
      };
      d.log_survival = [k, l](double x) {
        if (x <= 0) return 0.0;
        double term = 1.0, sum = 1.0;
        for (int j = 1; j < k; ++j) {
          term *= l * x / j;
          sum += term;
        }
        return std::log(sum) - l * x;
      };
      d.cdf = [surv = d.survival](double x) { return 1.0 - surv(x); };
      d.density = [k, l](double x) {
        if (x <= 0) return 0.0;
        double v = l;
        for (int j = 1; j < k; ++j) v *= l * x / j;
        return v * std::exp(-l * x);
      };
      d.mean = k / l;
      break;
    }
    case Family::pareto1: {
      require(p.size() <= 1, "pareto1: takes an optional positive shape");
      const double a = p.empty() ? 1.0 : p[0];
      require(a > 0, "pareto1: shape must be positive");
      d.name = "pareto1(" + std::to_string(a) + ")";
      d.lo = 1.0;
      d.survival = [a](double x) { return x <= 1.0 ? 1.0 : std::pow(x, -a); };
      d.cdf = [a](double x) { return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, -a); };
      d.density = [a](double x) { return x < 1.0 ? 0.0 : a * std::pow(x, -a - 1.0); };
      d.log_survival = [a](double x) { return x <= 1.0 ? 0.0 : -a * std::log(x); };
      if (a > 1.0)
        d.mean = a / (a - 1.0);
      else
        d.mean = std::nullopt;  // heavy tail, no finite mean
      break;
    }
    case Family::uniform: {
      require(p.size() == 2 && p[0] >= 0 && p[1] > p[0], "uniform: needs 0 <= lo < hi");
      const double lo = p[0], hi = p[1], w = p[1] - p[0];
      d.name = "uniform(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
      d.lo = lo;
      d.hi = hi;
      d.cdf = [lo, hi, w](double x) {
        if (x <= lo) return 0.0;
        if (x >= hi) return 1.0;
        return (x - lo) / w;
      };
      d.survival = [c = d.cdf](double x) { return 1.0 - c(x); };
      d.density = [lo, hi, w](double x) { return (x > lo && x < hi) ? 1.0 / w : 0.0; };
      d.mean = 0.5 * (lo + hi);
      break;
    }
    case Family::smoothstep: {
      require(p.size() == 2 && p[0] >= 0 && p[1] > p[0], "smoothstep: needs 0 <= lo < hi");
      const double lo = p[0], hi = p[1], w = p[1] - p[0];
      d.name = "smoothstep(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
      d.lo = lo;
      d.hi = hi;
      d.cdf = [lo, hi, w](double x) {
        if (x <= lo) return 0.0;
        if (x >= hi) return 1.0;
        const double u = (x - lo) / w;
        return u * u * (3.0 - 2.0 * u);
      };
      d.survival = [c = d.cdf](double x) { return 1.0 - c(x); };
      d.density = [lo, hi, w](double x) {
        if (x <= lo || x >= hi) return 0.0;
        const double u = (x - lo) / w;
        return 6.0 * u * (1.0 - u) / w;
      };
      d.mean = 0.5 * (lo + hi);
      break;
    }
  }
  return d;
}

inline DistributionHandle make_distribution(const PiecewiseSurvival& spec,
                                            const QuadratureConfig& cfg = {}) {
  using detail::require;
  require(!spec.segments.empty() && spec.segments.size() == spec.breakpoints.size() + 1,
          "piecewise: segments must be breakpoints + 1");
  for (std::size_t i = 0; i + 1 < spec.breakpoints.size(); ++i)
    require(spec.breakpoints[i] < spec.breakpoints[i + 1],
            "piecewise: breakpoints must be strictly increasing");
  for (double b : spec.breakpoints) require(b > 0, "piecewise: breakpoints must be positive");

  // Segment lookup: x in [bp[i-1], bp[i]) -> segment i.
  auto seg_index = [bps = spec.breakpoints](double x) {
    std::size_t i = 0;
    while (i < bps.size() && x >= bps[i]) ++i;
    return i;
  };
  auto surv = [segs = spec.segments, seg_index](double x) {
    if (x <= 0) return 1.0;
    const double v = detail::segment_value(segs[seg_index(x)], x);
    return std::min(1.0, std::max(0.0, v));
  };

  require(std::fabs(surv(1e-12) - 1.0) < 1e-9, "piecewise: survival must start at 1");
  if (!spec.allow_jumps) {
    for (std::size_t i = 0; i < spec.breakpoints.size(); ++i) {
      const double b = spec.breakpoints[i];
      const double left = detail::segment_value(spec.segments[i], b);
      const double right = detail::segment_value(spec.segments[i + 1], b);
      require(std::fabs(left - right) < 1e-9,
              "piecewise: survival jumps at breakpoint " + std::to_string(b) +
                  " (set allow_jumps to accept)");
    }
  }
  // Monotone on a probe grid.
  {
    const double end = spec.breakpoints.empty() ? 10.0 : spec.breakpoints.back() * 2.0 + 10.0;
    double prev = 1.0 + 1e-12;
    for (int i = 1; i <= 256; ++i) {
      const double x = end * i / 256.0;
      const double s = surv(x);
      require(s <= prev + 1e-9, "piecewise: survival must be nonincreasing");
      prev = s;
    }
  }

  DistributionHandle d;
  d.name = "piecewise_survival";
  d.survival = surv;
  d.cdf = [surv](double x) { return 1.0 - surv(x); };
  d.density = [segs = spec.segments, seg_index](double x) {
    if (x <= 0) return 0.0;
    return detail::segment_density(segs[seg_index(x)], x);
  };
  d.breakpoints = spec.breakpoints;
  d.log_survival = [segs = spec.segments, seg_index](double x) {
    if (x <= 0) return 0.0;
    return std::min(0.0, detail::segment_log_value(segs[seg_index(x)], x));
  };
  auto m = integrate_semi_infinite([surv](double x) { return surv(x); }, 0.0, surv, cfg);
  d.mean = m.diverged ? std::nullopt : std::optional<double>(m.value);
  return d;
}

inline DistributionHandle make_distribution(const EmpiricalDistribution& spec) {
  using detail::require;
  const auto& s = spec.samples;
  require(s.size() >= 2, "empirical: needs at least two samples");
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(s[i] >= 0, "empirical: samples must be nonnegative");
    if (i > 0) require(s[i] >= s[i - 1], "empirical: samples must be sorted ascending");
  }
  auto samples = std::make_shared<std::vector<double>>(s);
  DistributionHandle d;
  d.name = "empirical(n=" + std::to_string(s.size()) + ")";
  d.cdf = [samples](double x) {
    const auto it = std::upper_bound(samples->begin(), samples->end(), x);
    return static_cast<double>(it - samples->begin()) / static_cast<double>(samples->size());
  };
  d.survival = [c = d.cdf](double x) { return 1.0 - c(x); };
  d.lo = 0.0;
  d.hi = s.back();
  d.mean = 0.0;
  for (double v : s) *d.mean += v / static_cast<double>(s.size());
  d.breakpoints = s;
  return d;
}

// ---------------------------------------------------------------------------
// Reliability functionals

inline double hazard_rate(const DistributionHandle& d, double t) {
  if (!d.has_density()) throw capability_error("hazard_rate: no density on " + d.name);
  const double s = d.survival(t);
  if (!(s > 0)) throw std::domain_error("hazard_rate: survival vanishes at t");
  return d.density(t) / s;
}

inline double reversed_hazard_rate(const DistributionHandle& d, double t) {
  if (!d.has_density()) throw capability_error("reversed_hazard_rate: no density on " + d.name);
  const double F = d.cdf(t);
  if (!(F > 0)) throw std::domain_error("reversed_hazard_rate: cdf vanishes at t");
  return d.density(t) / F;
}

/// delta_F(t) = E[X - t | X > t]. Divergence is reported via the flag.
inline IntegralResult mean_residual_life(const DistributionHandle& d, double t,
                                         const QuadratureConfig& cfg = {}) {
  const double s = d.survival(t);
  if (!(s > 0)) throw std::domain_error("mean_residual_life: survival vanishes at t");
  IntegralResult tail;
  if (d.bounded()) {
    tail = integrate_finite_split(d.survival, t, d.hi, d.breakpoints, cfg);
  } else {
    std::vector<double> bps;
    for (double b : d.breakpoints)
      if (b > t) bps.push_back(b);
    double from = t;
    tail = {0.0, 0.0, true, false};
    if (!bps.empty()) {
      tail = integrate_finite_split(d.survival, t, bps.back(), bps, cfg);
      from = bps.back();
    }
    auto rest = integrate_semi_infinite(d.survival, from, d.survival, cfg);
    tail.value += rest.value;
    tail.error_estimate += rest.error_estimate;
    tail.converged = tail.converged && rest.converged;
    tail.diverged = tail.diverged || rest.diverged;
  }
  if (tail.diverged) return {0.0, 0.0, false, true};
  return {tail.value / s, tail.error_estimate / s, tail.converged, false};
}

/// m_F(t) = E[t - X | X <= t].
inline double mean_inactivity_time(const DistributionHandle& d, double t,
                                   const QuadratureConfig& cfg = {}) {
  const double F = d.cdf(t);
  if (!(F > 0)) throw std::domain_error("mean_inactivity_time: cdf vanishes at t");
  auto r = integrate_finite_split(d.cdf, d.lo, t, d.breakpoints, cfg);
  return r.value / F;
}

/// E[X | X <= t].
inline double truncated_mean(const DistributionHandle& d, double t,
                             const QuadratureConfig& cfg = {}) {
  return t - mean_inactivity_time(d, t, cfg);
}

/// General conditional mean m_X(t1, t2) = E[X | t1 <= X <= t2].
inline double general_conditional_mean(const DistributionHandle& d, double t1, double t2,
                                       const QuadratureConfig& cfg = {}) {
  if (!d.has_density()) throw capability_error("general_conditional_mean: no density");
  const double mass = d.cdf(t2) - d.cdf(t1);
  if (!(mass > 0)) throw std::domain_error("general_conditional_mean: empty window");
  auto r = integrate_finite_split([&d](double x) { return x * d.density(x); }, t1, t2,
                                  d.breakpoints, cfg);
  return r.value / mass;
}

// ---------------------------------------------------------------------------
// Combinators

/// Equilibrium distribution: density survival(x) / E(X).
inline DistributionHandle equilibrium(const DistributionHandle& d,
                                      const QuadratureConfig& cfg = {}) {
  if (!d.mean || !(*d.mean > 0) || !std::isfinite(*d.mean))
    throw capability_error("equilibrium: requires a finite positive mean");
  const double mu = *d.mean;
  auto base = std::make_shared<DistributionHandle>(d);
  DistributionHandle e;
  e.name = "equilibrium(" + d.name + ")";
  e.lo = d.lo;
  e.hi = d.hi;
  e.breakpoints = d.breakpoints;
  e.density = [base, mu](double x) {
    if (x < base->lo || x >= base->hi) return 0.0;
    return base->survival(x) / mu;
  };
  e.cdf = [base, mu, cfg](double x) {
    if (x <= base->lo) return 0.0;
    if (x >= base->hi) return 1.0;
    auto r = integrate_finite_split(base->survival, base->lo, x, base->breakpoints, cfg);
    return std::min(1.0, r.value / mu);
  };
  e.survival = [c = e.cdf](double x) { return 1.0 - c(x); };
  auto m2 = d.bounded()
                ? integrate_finite_split([base](double x) { return x * base->survival(x); },
                                         d.lo, d.hi, d.breakpoints, cfg)
                : integrate_semi_infinite([base](double x) { return x * base->survival(x); },
                                          d.lo, base->survival, cfg);
  e.mean = m2.diverged ? std::nullopt : std::optional<double>(m2.value / mu);
  return e;
}

/// Mixture with cdf p*F + (1-p)*G.
inline DistributionHandle mixture(const DistributionHandle& X, const DistributionHandle& Y,
                                  double p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("mixture: weight must lie in (0,1)");
  auto a = std::make_shared<DistributionHandle>(X);
  auto b = std::make_shared<DistributionHandle>(Y);
  DistributionHandle d;
  d.name = "mix(" + X.name + "," + Y.name + ";" + std::to_string(p) + ")";
  d.lo = std::min(X.lo, Y.lo);
  d.hi = std::max(X.hi, Y.hi);
  d.cdf = [a, b, p](double x) { return p * a->cdf(x) + (1 - p) * b->cdf(x); };
  d.survival = [a, b, p](double x) { return p * a->survival(x) + (1 - p) * b->survival(x); };
  if (X.has_density() && Y.has_density())
    d.density = [a, b, p](double x) { return p * a->density(x) + (1 - p) * b->density(x); };
  if (X.mean && Y.mean) d.mean = p * *X.mean + (1 - p) * *Y.mean;
  d.breakpoints = X.breakpoints;
  d.breakpoints.insert(d.breakpoints.end(), Y.breakpoints.begin(), Y.breakpoints.end());
  std::sort(d.breakpoints.begin(), d.breakpoints.end());
  return d;
}

/// Distribution of a*X + b, a > 0, b >= 0.
inline DistributionHandle affine_transform(const DistributionHandle& X, double a, double b) {
  if (!(a > 0) || !(b >= 0)) throw std::invalid_argument("affine_transform: needs a > 0, b >= 0");
  auto base = std::make_shared<DistributionHandle>(X);
  DistributionHandle d;
  d.name = "affine(" + X.name + ")";
  d.lo = a * X.lo + b;
  d.hi = std::isfinite(X.hi) ? a * X.hi + b : inf;
  d.cdf = [base, a, b](double x) { return base->cdf((x - b) / a); };
  d.survival = [base, a, b](double x) { return base->survival((x - b) / a); };
  if (X.log_survival)
    d.log_survival = [base, a, b](double x) { return base->log_survival((x - b) / a); };
  if (X.log_cdf) d.log_cdf = [base, a, b](double x) { return base->log_cdf((x - b) / a); };
  if (X.has_density())
    d.density = [base, a, b](double x) { return base->density((x - b) / a) / a; };
  if (X.mean) d.mean = a * *X.mean + b;
  for (double bp : X.breakpoints) d.breakpoints.push_back(a * bp + b);
  return d;
}

/// Proportional hazards construct: survival = base survival ^ alpha.
inline DistributionHandle proportional_hazards(const DistributionHandle& G, double alpha,
                                               const QuadratureConfig& cfg = {}) {
  if (!(alpha > 0)) throw std::invalid_argument("proportional_hazards: alpha must be positive");
  auto base = std::make_shared<DistributionHandle>(G);
  DistributionHandle d;
  d.name = "ph(" + G.name + ",alpha=" + std::to_string(alpha) + ")";
  d.lo = G.lo;
  d.hi = G.hi;
  d.breakpoints = G.breakpoints;
  d.survival = [base, alpha](double x) { return std::pow(base->survival(x), alpha); };
  d.cdf = [s = d.survival](double x) { return 1.0 - s(x); };
  d.log_survival = [base, alpha](double x) { return alpha * base->ln_survival(x); };
  if (G.has_density())
    d.density = [base, alpha](double x) {
      const double s = base->survival(x);
      if (!(s > 0)) return 0.0;
      return alpha * std::pow(s, alpha - 1.0) * base->density(x);
    };
  auto m = d.bounded() ? integrate_finite_split(d.survival, d.lo, d.hi, d.breakpoints, cfg)
                       : integrate_semi_infinite(d.survival, d.lo, d.survival, cfg);
  d.mean = m.diverged ? std::nullopt : std::optional<double>(m.value + d.lo);
  return d;
}

/// Proportional reversed hazards construct: cdf = base cdf ^ theta.
inline DistributionHandle proportional_reversed_hazards(const DistributionHandle& G, double theta,
                                                        const QuadratureConfig& cfg = {}) {
  if (!(theta > 0))
    throw std::invalid_argument("proportional_reversed_hazards: theta must be positive");
  auto base = std::make_shared<DistributionHandle>(G);
  DistributionHandle d;
  d.name = "prh(" + G.name + ",theta=" + std::to_string(theta) + ")";
  d.lo = G.lo;
  d.hi = G.hi;
  d.breakpoints = G.breakpoints;
  d.cdf = [base, theta](double x) { return std::pow(base->cdf(x), theta); };
  d.survival = [c = d.cdf](double x) { return 1.0 - c(x); };
  d.log_cdf = [base, theta](double x) { return theta * base->ln_cdf(x); };
  if (G.has_density())
    d.density = [base, theta](double x) {
      const double F = base->cdf(x);
      if (!(F > 0)) return 0.0;
      return theta * std::pow(F, theta - 1.0) * base->density(x);
    };
  auto m = d.bounded() ? integrate_finite_split(d.survival, d.lo, d.hi, d.breakpoints, cfg)
                       : integrate_semi_infinite(d.survival, d.lo, d.survival, cfg);
  d.mean = m.diverged ? std::nullopt : std::optional<double>(m.value + d.lo);
  return d;
}

/// Distribution of phi(X) for a strictly monotone phi with known inverse.
/// For decreasing phi the cdf flips: P[phi(X) <= x] = survival(phi^{-1}(x)).
inline DistributionHandle monotone_transform(const DistributionHandle& X,
                                             std::function<double(double)> phi,
                                             std::function<double(double)> phi_inverse,
                                             std::function<double(double)> phi_derivative,
                                             bool increasing = true) {
  auto base = std::make_shared<DistributionHandle>(X);
  DistributionHandle d;
  d.name = "transform(" + X.name + ")";
  const double e0 = phi(X.lo);
  const double e1 = std::isfinite(X.hi) ? phi(X.hi) : (increasing ? inf : phi(X.lo * 0.0));
  d.lo = increasing ? e0 : std::min(e1, e0);
  d.hi = increasing ? e1 : std::max(e1, e0);
  if (increasing) {
    d.cdf = [base, phi_inverse](double x) { return base->cdf(phi_inverse(x)); };
    d.survival = [base, phi_inverse](double x) { return base->survival(phi_inverse(x)); };
    if (X.log_survival)
      d.log_survival = [base, phi_inverse](double x) { return base->log_survival(phi_inverse(x)); };
    if (X.log_cdf)
      d.log_cdf = [base, phi_inverse](double x) { return base->log_cdf(phi_inverse(x)); };
  } else {
    d.cdf = [base, phi_inverse](double x) { return base->survival(phi_inverse(x)); };
    d.survival = [base, phi_inverse](double x) { return base->cdf(phi_inverse(x)); };
    if (X.log_survival)
      d.log_cdf = [base, phi_inverse](double x) { return base->log_survival(phi_inverse(x)); };
    if (X.log_cdf)
      d.log_survival = [base, phi_inverse](double x) { return base->log_cdf(phi_inverse(x)); };
  }
  if (X.has_density())
    d.density = [base, phi_inverse, phi_derivative](double x) {
      const double y = phi_inverse(x);
      return base->density(y) / std::fabs(phi_derivative(y));
    };
  for (double bp : X.breakpoints) d.breakpoints.push_back(phi(bp));
  std::sort(d.breakpoints.begin(), d.breakpoints.end());
  return d;
}

}  // namespace cumres
