#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cumres/catalog.hpp"
#include "cumres/interval.hpp"

using namespace cumres;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("interval entropy oracle on the uniform window") {
  auto u = make_distribution({Family::uniform, {0.0, 1.0}});
  auto v = icre(u, {0.25, 0.75});
  REQUIRE_FALSE(v.diverged());
  REQUIRE_THAT(v.value, WithinAbs(-0.02139582209583899, 1e-9));
  // The doubly truncated variable is uniform(0.25, 0.75); both interval
  // entropies coincide with those of that shifted uniform.
  REQUIRE_THAT(icpe(u, {0.25, 0.75}).value, WithinAbs(v.value, 1e-9));
}

TEST_CASE("window validation") {
  auto u = make_distribution({Family::uniform, {0.0, 1.0}});
  REQUIRE_THROWS_AS(check_window(u, {0.75, 0.25}), window_error);
  REQUIRE_THROWS_AS(check_window(u, {2.0, 3.0}), window_error);
  REQUIRE_NOTHROW(check_window(u, {0.1, 0.9}));
}

TEST_CASE("general failure rates of a window") {
  auto e = make_distribution({Family::exponential, {1.0}});
  TruncationWindow w{0.5, 1.5};
  auto h = gfr(e, w);
  const double mass = e.cdf(w.t2) - e.cdf(w.t1);
  REQUIRE_THAT(h.h1, WithinRel(e.density(w.t1) / mass, 1e-12));
  REQUIRE_THAT(h.h2, WithinRel(e.density(w.t2) / mass, 1e-12));
}

TEST_CASE("interval inaccuracy reduces to interval entropy at equal arguments") {
  auto e = make_distribution({Family::erlang, {2.0, 1.5}});
  TruncationWindow w{0.4, 1.8};
  REQUIRE_THAT(icri(e, e, w).value, WithinAbs(icre(e, w).value, 1e-8));
  REQUIRE_THAT(icpi(e, e, w).value, WithinAbs(icpe(e, w).value, 1e-8));
}

TEST_CASE("wide windows recover the dynamic measures") {
  auto X = make_distribution({Family::exponential, {1.0}});
  auto Y = make_distribution({Family::weibull, {1.0, 2.0}});
  const double t = 0.4;
  REQUIRE_THAT(icri(X, Y, {t, 60.0}).value, WithinAbs(dcri(X, Y, t).value, 1e-6));
  REQUIRE_THAT(icpi(X, Y, {1e-9, 1.3}).value, WithinAbs(dcpi(X, Y, 1.3).value, 1e-6));
}

TEST_CASE("dual-route decomposition") {
  auto X = make_distribution({Family::exponential, {1.0}});
  auto Y = make_distribution({Family::exponential, {2.0}});
  auto rep = icri_decomposition(X, Y, {0.3, 1.2});
  REQUIRE(rep.precondition_ok);
  REQUIRE(rep.passed);

  auto U = make_distribution({Family::uniform, {0.0, 1.0}});
  auto S = make_distribution({Family::smoothstep, {0.0, 1.0}});
  auto rep2 = icri_decomposition(U, S, {0.2, 0.7});
  REQUIRE(rep2.passed);
}

TEST_CASE("partial derivative in the left endpoint is finite on smooth pairs") {
  auto X = make_distribution({Family::weibull, {1.2, 1.7}});
  auto Y = make_distribution({Family::gamma, {2.0, 1.5}});
  const double d = icri_partial_t1(X, Y, {0.5, 1.6});
  REQUIRE(std::isfinite(d));
}

TEST_CASE("scale transforms act linearly on the interval inaccuracy") {
  auto X = make_distribution({Family::exponential, {1.0}});
  auto Y = make_distribution({Family::exponential, {2.0}});
  const double c = 2.5;
  auto rep = monotone_transform_bounds(
      X, Y, [c](double x) { return c * x; }, [c](double x) { return x / c; },
      [c](double) { return c; }, c, c, true, {0.75, 3.0});
  REQUIRE(rep.precondition_ok);
  REQUIRE(rep.passed);
}

TEST_CASE("decreasing reflection swaps residual and past interval inaccuracy") {
  auto U = make_distribution({Family::uniform, {0.0, 1.0}});
  auto S = make_distribution({Family::smoothstep, {0.0, 1.0}});
  auto rep = monotone_transform_bounds(
      U, S, [](double x) { return 1.0 - x; }, [](double x) { return 1.0 - x; },
      [](double) { return -1.0; }, 1.0, 1.0, false, {0.3, 0.8});
  REQUIRE(rep.precondition_ok);
  REQUIRE(rep.passed);
}
