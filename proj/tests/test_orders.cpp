#include <catch2/catch_amalgamated.hpp>

#include "cumres/orders.hpp"

using namespace cumres;

TEST_CASE("usual stochastic order") {
  auto fast = make_distribution({Family::exponential, {2.0}});
  auto slow = make_distribution({Family::exponential, {1.0}});
  auto c = certify_order(fast, slow, OrderRelation::st);
  REQUIRE(c.direction == OrderDirection::x_below_y);
  REQUIRE(certified_below(c));
  REQUIRE_FALSE(certified_above(c));

  auto self = certify_order(slow, slow, OrderRelation::st);
  REQUIRE(self.direction == OrderDirection::equal);
  REQUIRE(certified_below(self));
  REQUIRE(certified_above(self));
}

TEST_CASE("hazard rate order via proportional hazards") {
  auto G = make_distribution({Family::weibull, {1.0, 1.5}});
  auto X = proportional_hazards(G, 2.0);  // doubled hazard, stochastically smaller
  auto c = certify_order(X, G, OrderRelation::hr);
  REQUIRE(certified_below(c));
  // hr implies st.
  REQUIRE(certified_below(certify_order(X, G, OrderRelation::st)));
}

TEST_CASE("reversed hazard rate order via proportional reversed hazards") {
  auto U = make_distribution({Family::uniform, {0.0, 1.0}});
  auto Y = proportional_reversed_hazards(U, 2.0);  // doubled reversed hazard
  auto c = certify_order(U, Y, OrderRelation::rh);
  REQUIRE(certified_below(c));
}

TEST_CASE("crossing survivals are incomparable") {
  auto a = make_distribution({Family::weibull, {1.0, 0.5}});
  auto b = make_distribution({Family::weibull, {1.0, 2.0}});
  auto c = certify_order(a, b, OrderRelation::st);
  REQUIRE(c.direction == OrderDirection::incomparable);
  REQUIRE_FALSE(certified_below(c));
  REQUIRE_FALSE(certified_above(c));
}

TEST_CASE("ageing classes") {
  auto e = make_distribution({Family::exponential, {1.0}});
  // The exponential sits exactly on the NBU/NWU boundary (the survival
  // factorizes), so both directions certify. The expectation classes are
  // exercised away from the boundary below; at the boundary the deep-tail
  // mean residual life is dominated by quadrature noise.
  REQUIRE(certify_ageing(e, AgeingClass::NBU).certified());
  REQUIRE(certify_ageing(e, AgeingClass::NWU).certified());

  auto wearing = make_distribution({Family::weibull, {1.0, 2.0}});
  REQUIRE(certify_ageing(wearing, AgeingClass::NBU).certified());
  REQUIRE(certify_ageing(wearing, AgeingClass::NBUE).certified());
  REQUIRE_FALSE(certify_ageing(wearing, AgeingClass::NWU).certified());

  auto improving = make_distribution({Family::weibull, {1.0, 0.7}});
  REQUIRE(certify_ageing(improving, AgeingClass::NWU).certified());
  REQUIRE(certify_ageing(improving, AgeingClass::NWUE).certified());
  REQUIRE_FALSE(certify_ageing(improving, AgeingClass::NBU).certified());
}
