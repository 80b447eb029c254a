#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cumres/catalog.hpp"
#include "cumres/measures.hpp"

using namespace cumres;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("closed-form entropies") {
  for (double l : {0.5, 1.0, 2.7}) {
    auto e = make_distribution({Family::exponential, {l}});
    REQUIRE_THAT(cre(e).value, WithinRel(1.0 / l, 1e-8));
    REQUIRE_THAT(shannon_entropy(e).value, WithinRel(1.0 - std::log(l), 1e-8));
  }
  auto e1 = make_distribution({Family::exponential, {1.0}});
  REQUIRE_THAT(cpe(e1).value, WithinRel(M_PI * M_PI / 6.0 - 1.0, 1e-8));

  for (double b : {1.0, 2.0}) {
    auto u = make_distribution({Family::uniform, {0.0, b}});
    REQUIRE_THAT(cre(u).value, WithinRel(b / 4.0, 1e-8));
    REQUIRE_THAT(cpe(u).value, WithinRel(b / 4.0, 1e-8));
  }
}

TEST_CASE("inaccuracy reduces to entropy at equal arguments") {
  for (const auto& [X, Y] : catalog::smooth_pairs()) {
    (void)Y;
    REQUIRE_THAT(cri(X, X).value, WithinAbs(cre(X).value, 1e-8));
    REQUIRE_THAT(cpi(X, X).value, WithinAbs(cpe(X).value, 1e-8));
  }
}

TEST_CASE("exponential cross inaccuracy closed form") {
  // cri(exp(l1), exp(l2)) = l2 / l1^2.
  for (auto [l1, l2] : {std::pair{1.0, 2.0}, {2.0, 0.7}, {0.5, 0.5}}) {
    auto X = make_distribution({Family::exponential, {l1}});
    auto Y = make_distribution({Family::exponential, {l2}});
    REQUIRE_THAT(cri(X, Y).value, WithinRel(l2 / (l1 * l1), 1e-8));
  }
}

TEST_CASE("matched exponential/Erlang pair") {
  const double l = catalog::matched_erlang_rate();
  REQUIRE_THAT(l, WithinAbs(1.6241820703232426, 1e-10));
  REQUIRE(std::fabs(euler_gamma + l - 2.0 * std::log(l) - 2.0 / l) <= 1e-10);

  auto X = catalog::matched_pair_x();
  auto Y = catalog::matched_pair_y(l);
  REQUIRE_THAT(kerridge_inaccuracy(X, Y).value, WithinAbs(kerridge_inaccuracy(Y, X).value, 1e-6));
  REQUIRE_THAT(cri(X, Y).value, WithinAbs(0.809177959714559, 1e-7));
  REQUIRE_THAT(cri(Y, X).value, WithinAbs(3.0 / (l * l), 1e-7));
  REQUIRE_THAT(cpi(X, Y).value, WithinAbs(0.955987736344218, 1e-7));
  REQUIRE_THAT(cpi(Y, X).value, WithinAbs(0.458129415098688, 1e-7));
}

TEST_CASE("KL divergence sanity") {
  auto X = make_distribution({Family::exponential, {1.0}});
  auto Y = make_distribution({Family::exponential, {2.0}});
  // KL(exp(1) || exp(2)) = ln(1/2) + 2/1 - 1.
  REQUIRE_THAT(kl_divergence(X, Y).value, WithinRel(std::log(0.5) + 1.0, 1e-8));
  REQUIRE_THAT(kl_divergence(X, X).value, WithinAbs(0.0, 1e-10));
  REQUIRE(kl_divergence(Y, X).value >= 0.0);
}

TEST_CASE("heavy-tailed inaccuracy diverges cleanly") {
  auto P = make_distribution({Family::pareto1, {}});
  auto E = make_distribution({Family::exponential, {1.0}});
  auto v = cri(P, E);
  REQUIRE(v.diverged());
  REQUIRE(std::isfinite(v.value));
  REQUIRE_FALSE(crir(P, E).has_value());
}

TEST_CASE("inaccuracy ratios") {
  auto X = make_distribution({Family::exponential, {1.0}});
  REQUIRE_THAT(*crir(X, X), WithinAbs(1.0, 1e-8));
  REQUIRE_THAT(*cpir(X, X), WithinAbs(1.0, 1e-8));
  auto Y = make_distribution({Family::weibull, {1.0, 2.0}});
  REQUIRE(crir(X, Y).has_value());
}

TEST_CASE("cumulative-hazard expectation routes agree with direct integration") {
  for (const auto& [X, Y] : catalog::smooth_pairs()) {
    auto direct = cri(X, Y);
    auto alt = cri_as_expectation(X, Y);
    const double tol = 1e-9 + 5.0 * (direct.result.error_estimate + alt.result.error_estimate);
    REQUIRE_THAT(alt.value, WithinAbs(direct.value, std::max(tol, 1e-7)));

    auto directp = cpi(X, Y);
    auto altp = cpi_as_expectation(X, Y);
    const double tolp = 1e-9 + 5.0 * (directp.result.error_estimate + altp.result.error_estimate);
    REQUIRE_THAT(altp.value, WithinAbs(directp.value, std::max(tolp, 1e-7)));
  }
}

TEST_CASE("equilibrium identities") {
  auto X = make_distribution({Family::exponential, {1.0}});
  auto Y = make_distribution({Family::erlang, {2.0, 1.5}});
  auto rep = equilibrium_identity_check(X, &Y);
  REQUIRE(rep.precondition_ok);
  REQUIRE(rep.passed);
  auto solo = equilibrium_identity_check(Y, nullptr);
  REQUIRE(solo.passed);
}
