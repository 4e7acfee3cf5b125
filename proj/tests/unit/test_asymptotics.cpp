#include <doctest.h>

#include "bo/asymptotics.hpp"
#include "helpers.hpp"

using namespace bo;
using namespace bo::asym;

TEST_CASE("Euler values")
{
    const EulerTable t = euler_values(6);
    CHECK(t.at_one[0] == 1);
    CHECK(t.at_one[1] == Rational(1, 2));
    CHECK(t.at_one[2] == 0);
    CHECK(t.at_one == euler_by_recurrence(6, 1));
    CHECK(t.at_zero == euler_by_recurrence(6, 0));
}

TEST_CASE("half-integer gamma ratios")
{
    CHECK(gamma_half_ratio(0) == 1);
    CHECK(gamma_half_ratio(4) == Rational(3, 4));
    CHECK_THROWS_AS(gamma_half_ratio(3), std::domain_error);
}

TEST_CASE("expansion of F for r=(0)")
{
    const AsymExpansion a = asym_F({0}, 3);
    REQUIRE(a.order() == 3);
    CHECK(a.c[0] == Rational(1, 2));
    CHECK(a.c[1] == Rational(-1, 4));
    CHECK(a.c[2] == Rational(-1, 8));
    CHECK(a.c[3] == Rational(-5, 48));
}

TEST_CASE("leading terms and first corrections")
{
    CHECK(asym_F({1, 0}, 1).c[0] == Rational(1, 4));
    CHECK(asym_F({5, 4, 3, 2}, 1).c[1] == first_order_c1_F({5, 4, 3, 2}));
    CHECK(first_order_c1_F({5, 4, 3, 2}) == Rational(-19, 16));
    const AsymExpansion g = asym_G({{0}, {1}}, 3);
    CHECK(g.c[0] == Rational(1, 4));
    CHECK(g.c[1] == Rational(1, 8));
    CHECK(g.c[3] == Rational(-19, 96));
    CHECK(asym_G({{}, {3, 1, 0}}, 1).c[1] == first_order_c1_G({{}, {3, 1, 0}}));
}
