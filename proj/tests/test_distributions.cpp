#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cumres/catalog.hpp"
#include "cumres/distribution.hpp"

using namespace cumres;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("parametric families: survival, density, mean, exact logs") {
  auto e = make_distribution({Family::exponential, {2.0}});
  REQUIRE_THAT(e.survival(1.3), WithinRel(std::exp(-2.6), 1e-14));
  REQUIRE_THAT(e.density(1.3), WithinRel(2.0 * std::exp(-2.6), 1e-14));
  REQUIRE_THAT(*e.mean, WithinAbs(0.5, 1e-14));
  REQUIRE_THAT(e.ln_survival(400.0), WithinRel(-800.0, 1e-14));  // past underflow

  auto w = make_distribution({Family::weibull, {1.5, 2.0}});
  REQUIRE_THAT(w.survival(1.2), WithinRel(std::exp(-std::pow(1.2 / 1.5, 2.0)), 1e-14));
  REQUIRE_THAT(*w.mean, WithinRel(1.5 * std::tgamma(1.5), 1e-12));
  REQUIRE_THAT(w.ln_survival(50.0), WithinRel(-std::pow(50.0 / 1.5, 2.0), 1e-13));

  auto erl = make_distribution({Family::erlang, {2.0, 1.5}});
  REQUIRE_THAT(erl.survival(2.0), WithinRel((1.0 + 3.0) * std::exp(-3.0), 1e-13));
  REQUIRE_THAT(*erl.mean, WithinRel(2.0 / 1.5, 1e-12));

  auto p = make_distribution({Family::pareto1, {2.0}});
  REQUIRE_THAT(p.survival(3.0), WithinRel(1.0 / 9.0, 1e-14));
  REQUIRE_THAT(p.ln_survival(1e6), WithinRel(-2.0 * std::log(1e6), 1e-13));

  auto u = make_distribution({Family::uniform, {0.0, 2.0}});
  REQUIRE_THAT(u.cdf(0.5), WithinAbs(0.25, 1e-14));
  REQUIRE_THAT(*u.mean, WithinAbs(1.0, 1e-14));

  auto s = make_distribution({Family::smoothstep, {0.0, 1.0}});
  REQUIRE_THAT(s.cdf(0.5), WithinAbs(0.5, 1e-14));
  REQUIRE(s.cdf(0.25) < 0.25);  // below the uniform near the left edge
  REQUIRE(s.density(0.0) == 0.0);
}

TEST_CASE("piecewise survival: continuity checks and exact logs") {
  auto x = catalog::kinked_pair_x();
  REQUIRE_THAT(x.survival(3.0), WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(x.survival(3.5), WithinRel(std::exp(6.0 - 7.0), 1e-12));
  REQUIRE_THAT(x.survival(5.0), WithinRel(std::exp(2.0 - 5.0), 1e-12));
  REQUIRE_THAT(x.ln_survival(5.0), WithinAbs(-3.0, 1e-12));

  PiecewiseSurvival jumpy;
  jumpy.breakpoints = {1.0};
  jumpy.segments.resize(2);
  jumpy.segments[0] = {SurvivalSegment::Kind::constant, 1.0, 0.0, 0.0, 0.0};
  jumpy.segments[1] = {SurvivalSegment::Kind::constant, 0.4, 0.0, 0.0, 0.0};
  REQUIRE_THROWS(make_distribution(jumpy));
  jumpy.allow_jumps = true;
  REQUIRE_NOTHROW(make_distribution(jumpy));
}

TEST_CASE("empirical distribution is a right-continuous step function") {
  auto d = make_distribution(EmpiricalDistribution{{1.0, 2.0, 4.0, 4.0}});
  REQUIRE(d.cdf(0.5) == 0.0);
  REQUIRE_THAT(d.cdf(1.0), WithinAbs(0.25, 1e-14));
  REQUIRE_THAT(d.cdf(3.0), WithinAbs(0.5, 1e-14));
  REQUIRE_THAT(d.cdf(4.0), WithinAbs(1.0, 1e-14));
  REQUIRE_THAT(*d.mean, WithinAbs(2.75, 1e-14));
}

TEST_CASE("equilibrium of an exponential is itself") {
  auto e = make_distribution({Family::exponential, {1.7}});
  auto eq = equilibrium(e);
  for (double t : {0.1, 0.7, 2.0})
    REQUIRE_THAT(eq.survival(t), WithinRel(e.survival(t), 1e-8));
}

TEST_CASE("mixture, affine and power combinators") {
  auto a = make_distribution({Family::exponential, {1.0}});
  auto b = make_distribution({Family::weibull, {1.0, 2.0}});
  auto m = mixture(a, b, 0.3);
  REQUIRE_THAT(m.survival(0.8), WithinRel(0.3 * a.survival(0.8) + 0.7 * b.survival(0.8), 1e-13));

  auto t = affine_transform(a, 2.0, 1.0);
  REQUIRE_THAT(t.survival(3.0), WithinRel(a.survival(1.0), 1e-13));

  auto ph = proportional_hazards(a, 2.5);
  REQUIRE_THAT(ph.survival(0.6), WithinRel(std::pow(a.survival(0.6), 2.5), 1e-13));
  REQUIRE_THAT(ph.ln_survival(100.0), WithinRel(2.5 * a.ln_survival(100.0), 1e-13));

  auto u = make_distribution({Family::uniform, {0.0, 1.0}});
  auto prh = proportional_reversed_hazards(u, 3.0);
  REQUIRE_THAT(prh.cdf(0.5), WithinRel(0.125, 1e-13));
  REQUIRE_THAT(prh.ln_cdf(0.01), WithinRel(3.0 * std::log(0.01), 1e-13));
}

TEST_CASE("monotone transforms, increasing and decreasing") {
  auto u = make_distribution({Family::uniform, {0.0, 1.0}});
  auto doubled = monotone_transform(
      u, [](double x) { return 2.0 * x; }, [](double x) { return 0.5 * x; },
      [](double) { return 2.0; }, true);
  REQUIRE_THAT(doubled.cdf(1.0), WithinAbs(0.5, 1e-13));

  auto reflected = monotone_transform(
      u, [](double x) { return 1.0 - x; }, [](double x) { return 1.0 - x; },
      [](double) { return -1.0; }, false);
  REQUIRE_THAT(reflected.cdf(0.25), WithinAbs(0.25, 1e-13));
  REQUIRE_THAT(reflected.density(0.25), WithinAbs(1.0, 1e-13));
}

TEST_CASE("reliability quantities") {
  auto e = make_distribution({Family::exponential, {1.5}});
  REQUIRE_THAT(hazard_rate(e, 0.9), WithinRel(1.5, 1e-12));
  auto mrl = mean_residual_life(e, 2.0);
  REQUIRE_FALSE(mrl.diverged);
  REQUIRE_THAT(mrl.value, WithinRel(1.0 / 1.5, 1e-8));

  auto u = make_distribution({Family::uniform, {0.0, 2.0}});
  REQUIRE_THAT(mean_inactivity_time(u, 2.0), WithinAbs(1.0, 1e-8));
  REQUIRE_THAT(truncated_mean(u, 1.0), WithinAbs(0.5, 1e-8));
  REQUIRE_THAT(general_conditional_mean(u, 0.5, 1.5), WithinAbs(1.0, 1e-8));
  REQUIRE_THAT(reversed_hazard_rate(u, 1.0), WithinRel(1.0, 1e-12));
}

TEST_CASE("heavy tails flag divergent mean residual life") {
  auto p = make_distribution({Family::pareto1, {1.0}});
  auto mrl = mean_residual_life(p, 2.0);
  REQUIRE(mrl.diverged);
  REQUIRE(std::isfinite(mrl.value));
}

TEST_CASE("parameter validation") {
  REQUIRE_THROWS(make_distribution(ParametricSpec{Family::exponential, {-1.0}}));
  REQUIRE_THROWS(make_distribution(ParametricSpec{Family::uniform, {2.0, 1.0}}));
  REQUIRE_THROWS(mixture(make_distribution({Family::exponential, {1.0}}),
                         make_distribution({Family::exponential, {2.0}}), 1.5));
}
