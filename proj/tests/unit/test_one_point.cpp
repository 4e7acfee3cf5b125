#include <doctest.h>

#include "bo/one_point.hpp"
#include "helpers.hpp"

using namespace bo;

TEST_CASE("eta cubed")
{
    CHECK(eta_cubed(Q(7)) == series({{"1/8", 1}, {"9/8", -3}, {"25/8", 5}, {"49/8", -7}}, Q(7)));
}

TEST_CASE("n=1 one-point sum times Theta")
{
    const OnePointReport lit = one_point_n1_check(10, Q(20));
    CHECK_FALSE(lit.cells.passed);
    REQUIRE(lit.cells.first_mismatch);
    CHECK(lit.cells.first_mismatch->var_halves == 0);
    CHECK(lit.cells.first_mismatch->q_exponent == Q(0));

    OnePointOptions opt;
    opt.target = OnePointTarget::eta_cubed;
    const OnePointReport eta = one_point_n1_check(10, Q(20), opt);
    CHECK(eta.cells.passed);
    CHECK(eta.cells.cells_checked == 1721);
    CHECK(eta.uncertified == 39);

    opt.f0_perturbation = series({{"3", 1}}, Q(20));
    const OnePointReport bad = one_point_n1_check(10, Q(20), opt);
    CHECK_FALSE(bad.cells.passed);
}

TEST_CASE("inverse theta powers")
{
    for (int l = 1; l <= 3; ++l) {
        CAPTURE(l);
        const InverseThetaReport r = inverse_theta_check(l, 24, Q(10));
        CHECK(r.cells.passed);
        CHECK(r.cells.cells_checked > 0);
    }
    const ZetaLaurent inv = inverse_theta_power(1, 4, Q(2));
    // Theta^{-1} = q^{-1/8} t^{-1/2} (1 + t^{-1} + ...) (1 + O(q))
    CHECK(inv.at(-1).coefficient(Exp8{-1}) == 1);
    CHECK(inv.at(-3).coefficient(Exp8{-1}) == 1);
    CHECK(inv.at(1).coefficient(Exp8{-1}) == 0);
    CHECK_THROWS_AS(inverse_theta_check(3, 0, Q(10)), std::domain_error);
    CHECK_THROWS_AS(inverse_theta_power(0, 4, Q(2)), std::domain_error);
}
