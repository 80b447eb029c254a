#pragma once

// Grid-based certification of stochastic orders (st, hr, rh) and ageing
// classes (NBU/NWU, NBUE/NWUE). Certificates are finite-grid evidence with
// an explicit worst violation, not proofs.

#include <cmath>
#include <vector>

#include "cumres/distribution.hpp"

namespace cumres {

enum class OrderRelation { st, hr, rh };
enum class OrderDirection { x_below_y, x_above_y, equal, incomparable };

inline const char* order_name(OrderRelation r) {
  switch (r) {
    case OrderRelation::st: return "st";
    case OrderRelation::hr: return "hr";
    case OrderRelation::rh: return "rh";
  }
  return "?";
}

struct OrderCertificate {
  OrderRelation relation = OrderRelation::st;
  OrderDirection direction = OrderDirection::incomparable;
  std::vector<double> grid;
  double max_violation = 0.0;  // of the certified direction
};

/// Shared evaluation grid: uniform over the joint support plus a geometric
/// refinement toward zero, truncated where both survivals are negligible.
inline std::vector<double> order_grid(const DistributionHandle& X, const DistributionHandle& Y,
                                      int n = 256) {
  double hi;
  if (X.bounded() && Y.bounded()) {
    hi = std::max(X.hi, Y.hi);
  } else {
    hi = 1.0;
    while (std::max(X.survival(hi), Y.survival(hi)) > 1e-9 && hi < 1e12) hi *= 2.0;
  }
  std::vector<double> g;
  for (int i = 1; i <= n; ++i) g.push_back(hi * i / n);
  for (double t = hi / (2.0 * n); t > 1e-6 * hi; t *= 0.5) g.push_back(t);
  std::sort(g.begin(), g.end());
  return g;
}

/// st: survival_X vs survival_Y; hr: hazard_X vs hazard_Y (X below Y means
/// hazard_X >= hazard_Y); rh: reversed hazards (X below Y means
/// rev_hazard_X <= rev_hazard_Y).
inline OrderCertificate certify_order(const DistributionHandle& X, const DistributionHandle& Y,
                                      OrderRelation rel, int n = 256, double tol = 1e-9) {
  OrderCertificate c;
  c.relation = rel;
  c.grid = order_grid(X, Y, n);
  double below = 0.0, above = 0.0;  // violations of X<=Y resp. X>=Y
  for (double t : c.grid) {
    double lo_q, hi_q;  // quantities whose order encodes "X below Y"
    switch (rel) {
      case OrderRelation::st:
        lo_q = X.survival(t);
        hi_q = Y.survival(t);
        break;
      case OrderRelation::hr: {
        if (!X.has_density() || !Y.has_density())
          throw capability_error("certify_order: hr needs densities");
        const double sx = X.survival(t), sy = Y.survival(t);
        if (sx < 1e-12 || sy < 1e-12) continue;
        lo_q = Y.density(t) / sy;  // X below Y when hazard_X >= hazard_Y
        hi_q = X.density(t) / sx;
        break;
      }
      case OrderRelation::rh: {
        if (!X.has_density() || !Y.has_density())
          throw capability_error("certify_order: rh needs densities");
        const double fx = X.cdf(t), fy = Y.cdf(t);
        if (fx < 1e-12 || fy < 1e-12) continue;
        lo_q = X.density(t) / fx;
        hi_q = Y.density(t) / fy;
        break;
      }
    }
    below = std::max(below, lo_q - hi_q);
    above = std::max(above, hi_q - lo_q);
  }
  if (below <= tol && above <= tol) {
    c.direction = OrderDirection::equal;
    c.max_violation = std::max(below, above);
  } else if (below <= tol) {
    c.direction = OrderDirection::x_below_y;
    c.max_violation = below;
  } else if (above <= tol) {
    c.direction = OrderDirection::x_above_y;
    c.max_violation = above;
  } else {
    c.direction = OrderDirection::incomparable;
    c.max_violation = std::min(below, above);
  }
  return c;
}

inline bool certified_below(const OrderCertificate& c) {
  return c.direction == OrderDirection::x_below_y || c.direction == OrderDirection::equal;
}
inline bool certified_above(const OrderCertificate& c) {
  return c.direction == OrderDirection::x_above_y || c.direction == OrderDirection::equal;
}

enum class AgeingClass { NBU, NWU, NBUE, NWUE };

inline const char* ageing_name(AgeingClass c) {
  switch (c) {
    case AgeingClass::NBU: return "NBU";
    case AgeingClass::NWU: return "NWU";
    case AgeingClass::NBUE: return "NBUE";
    case AgeingClass::NWUE: return "NWUE";
  }
  return "?";
}

struct AgeingCertificate {
  AgeingClass cls = AgeingClass::NBU;
  double max_violation = 0.0;
  double tolerance = 1e-9;

  bool certified() const { return max_violation <= tolerance; }
};

/// NBU/NWU on an (x,t) pair grid; NBUE/NWUE by mean residual life against
/// the mean on a t grid.
inline AgeingCertificate certify_ageing(const DistributionHandle& X, AgeingClass cls, int n = 24,
                                        const QuadratureConfig& cfg = {}) {
  AgeingCertificate cert;
  cert.cls = cls;
  if (cls == AgeingClass::NBU || cls == AgeingClass::NWU) {
    auto g = order_grid(X, X, n);
    for (double x : g)
      for (double t : g) {
        const double lhs = X.survival(x + t);
        const double rhs = X.survival(x) * X.survival(t);
        const double v = (cls == AgeingClass::NBU) ? lhs - rhs : rhs - lhs;
        cert.max_violation = std::max(cert.max_violation, v);
      }
  } else {
    if (!X.mean || !std::isfinite(*X.mean))
      throw capability_error("certify_ageing: finite mean required for NBUE/NWUE");
    const double mu = *X.mean;
    auto g = order_grid(X, X, n);
    for (double t : g) {
      if (X.survival(t) < 1e-10) continue;
      auto mrl = mean_residual_life(X, t, cfg);
      if (mrl.diverged) throw capability_error("certify_ageing: divergent mean residual life");
      const double v = (cls == AgeingClass::NBUE) ? mrl.value - mu : mu - mrl.value;
      cert.max_violation = std::max(cert.max_violation, v);
    }
  }
  return cert;
}

}  // namespace cumres
