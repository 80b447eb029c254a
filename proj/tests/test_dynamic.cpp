#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cumres/catalog.hpp"
#include "cumres/dynamic.hpp"

using namespace cumres;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("memoryless residual measures are constant in t") {
  auto e = make_distribution({Family::exponential, {1.3}});
  for (double t : {0.0, 0.5, 2.0, 5.0})
    REQUIRE_THAT(dcre(e, t).value, WithinRel(1.0 / 1.3, 1e-8));
}

TEST_CASE("dynamic measures reduce to the static ones near the origin") {
  for (const auto& [X, Y] : catalog::smooth_pairs()) {
    REQUIRE_THAT(dcri(X, Y, 1e-6).value, WithinAbs(cri(X, Y).value, 1e-5));
    REQUIRE_THAT(dcri(X, X, 0.7).value, WithinAbs(dcre(X, 0.7).value, 1e-8));
  }
}

TEST_CASE("kinked pair: plateau value and published-branch discrepancy") {
  auto X = catalog::kinked_pair_x();
  auto Y = catalog::kinked_pair_y();
  for (double t : {4.0, 4.5, 6.0}) {
    REQUIRE_THAT(dcri(X, Y, t).value, WithinAbs(0.5, 1e-6));
    REQUIRE_THAT(catalog::kinked_pair_reference_dcri(t), WithinAbs(0.5, 1e-12));
  }
  // On (3,4) the published branch departs from direct integration of the
  // survival pair; both facts are pinned so neither can silently drift.
  REQUIRE(std::fabs(dcri(X, Y, 3.5).value - catalog::kinked_pair_reference_dcri(3.5)) > 0.05);
  DynamicMeasureCurve ref;
  for (int i = 1; i <= 64; ++i) {
    ref.t_grid.push_back(3.0 + i / 65.0);
    ref.values.push_back(catalog::kinked_pair_reference_dcri(ref.t_grid.back()));
  }
  REQUIRE(classify_monotonicity(ref).classification == Monotonicity::non_monotone);
}

TEST_CASE("branched pair: published curve is non-monotone, the measure is constant") {
  auto X = catalog::branched_pair_x();
  auto Y = catalog::branched_pair_y();
  const double a = dcpi(X, Y, 2.5).value;
  const double b = dcpi(X, Y, 4.5).value;
  REQUIRE_THAT(a, WithinAbs(b, 1e-8));
  DynamicMeasureCurve ref;
  for (int i = 1; i <= 64; ++i) {
    ref.t_grid.push_back(2.0 + 3.0 * i / 65.0);
    ref.values.push_back(catalog::branched_pair_reference_dcpi(ref.t_grid.back()));
  }
  REQUIRE(classify_monotonicity(ref).classification == Monotonicity::non_monotone);
}

TEST_CASE("monotonicity classifier") {
  DynamicMeasureCurve up;
  for (int i = 0; i < 16; ++i) {
    up.t_grid.push_back(i);
    up.values.push_back(i * 0.1);
  }
  REQUIRE(classify_monotonicity(up).classification == Monotonicity::increasing);
  DynamicMeasureCurve flat;
  for (int i = 0; i < 16; ++i) {
    flat.t_grid.push_back(i);
    flat.values.push_back(1.0);
  }
  REQUIRE(classify_monotonicity(flat).classification == Monotonicity::constant);
}

TEST_CASE("analytic derivatives match finite differences") {
  auto X = make_distribution({Family::weibull, {1.2, 1.7}});
  auto Y = make_distribution({Family::gamma, {2.0, 1.5}});
  QuadratureConfig tight;
  tight.rel_tol = 1e-10;
  tight.abs_tol = 1e-12;
  const double h = 1e-3;
  for (double t : {0.4, 0.9, 1.5}) {
    const double fd =
        (dcri(X, Y, t + h, tight).value - dcri(X, Y, t - h, tight).value) / (2.0 * h);
    REQUIRE_THAT(dcri_derivative(X, Y, t, tight), WithinAbs(fd, 1e-4));
    const double fdp =
        (dcpi(X, Y, t + h, tight).value - dcpi(X, Y, t - h, tight).value) / (2.0 * h);
    REQUIRE_THAT(dcpi_derivative(X, Y, t, tight), WithinAbs(fdp, 1e-4));
  }
  // The exponential pair has constant residual inaccuracy.
  auto E1 = make_distribution({Family::exponential, {1.0}});
  auto E2 = make_distribution({Family::exponential, {2.0}});
  for (double t : {0.3, 1.1})
    REQUIRE_THAT(dcri_derivative(E1, E2, t, tight), WithinAbs(0.0, 1e-8));
}

TEST_CASE("proportional hazards collapses inaccuracy to entropy") {
  auto G = make_distribution({Family::weibull, {1.0, 1.5}});
  const auto grid = curve_grid(0.05, 2.5, 32);
  for (double alpha : {0.5, 2.0, 3.0}) {
    auto X = proportional_hazards(G, alpha);
    auto rep = proportional_hazards_identity(X, G, alpha, grid);
    REQUIRE(rep.precondition_ok);
    REQUIRE(rep.passed);
  }
  auto U = make_distribution({Family::uniform, {0.0, 1.0}});
  const auto ugrid = curve_grid(0.05, 0.95, 32);
  for (double theta : {0.5, 2.0, 3.0}) {
    auto X = proportional_reversed_hazards(U, theta);
    auto rep = proportional_reversed_hazards_identity(X, U, theta, ugrid);
    REQUIRE(rep.precondition_ok);
    REQUIRE(rep.passed);
  }
}

TEST_CASE("linear transform identity") {
  auto X = make_distribution({Family::exponential, {1.0}});
  auto Y = make_distribution({Family::erlang, {2.0, 1.5}});
  auto rep = linear_transform_identity(X, Y, 2.0, 0.5, 0.8);
  REQUIRE(rep.precondition_ok);
  REQUIRE(rep.passed);
}

TEST_CASE("symmetric pair swaps past and residual inaccuracy") {
  auto X = make_distribution({Family::uniform, {0.0, 1.0}});
  auto Y = make_distribution({Family::smoothstep, {0.0, 1.0}});
  for (double t : {0.2, 0.5, 0.7}) {
    auto rep = symmetric_identity(X, Y, 1.0, t);
    REQUIRE(rep.precondition_ok);
    REQUIRE(rep.passed);
  }
}

TEST_CASE("conditional-expectation route for the past inaccuracy") {
  auto X = make_distribution({Family::uniform, {0.0, 1.0}});
  auto Y = make_distribution({Family::smoothstep, {0.0, 1.0}});
  const double t = 0.8;
  auto alt = dcpi_as_conditional_expectation(X, Y, t);
  auto direct = dcpi(Y, X, t);
  REQUIRE_THAT(alt.value, WithinAbs(direct.value, 1e-6));
}

TEST_CASE("truncated-mean gap identity") {
  auto U = make_distribution({Family::uniform, {0.0, 1.0}});
  // Raising the cdf to a power above 1 increases the reversed hazard rate.
  auto Y = proportional_reversed_hazards(U, 2.0);
  auto rep = zt_identity(U, Y, 0.9);
  REQUIRE(rep.precondition_ok);
  REQUIRE(rep.passed);
}
