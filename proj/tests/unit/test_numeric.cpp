#include <doctest.h>

#include "bo/closed_forms.hpp"
#include "bo/numeric.hpp"
#include "helpers.hpp"

using namespace bo;
using namespace bo::num;

TEST_CASE("theta transformation")
{
    PrecisionGuard g(50);
    for (const char* z : {"0", "0.2", "-0.4"}) {
        const ThetaTransform t = theta_transform_check(Real(z), Real("0.1"));
        CHECK(t.within_bound());
    }
    CHECK(theta_transform_check(Real(0), Real("0.1")).error < Real("1e-10"));
    CHECK_THROWS(theta_transform_check(Real("0.5"), Real("0.1")));
}

TEST_CASE("evaluation refuses an unmet tail bound")
{
    PrecisionGuard g(50);
    const TailMajorant tail = TailMajorant::multisum({0}, {});
    const Real y("0.1");
    const Real acc("1e-30");
    const Exp8 N = required_order(tail, y, acc);
    CHECK_NOTHROW(numeric_eval(forms::f_multisum({0}, N), y, tail, acc));
    CHECK_THROWS(numeric_eval(forms::f_multisum({0}, Q(10)), y, tail, acc));
    CHECK(required_order(tail, Real("0.05"), acc) > N);
}

TEST_CASE("precision guard restores the default")
{
    const unsigned before = Real::default_precision();
    {
        PrecisionGuard g(80);
        CHECK(Real::default_precision() == 80);
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("F for r=(0) matches its expansion to order y^4")
{
    PrecisionGuard g(50);
    const std::vector<Real> ys{Real("0.1"), Real("0.05"), Real("0.025")};
    const OrderRun run = convergence_order([](Exp8 N) { return forms::f_multisum({0}, N); },
                                           TailMajorant::multisum({0}, {}), asym::asym_F({0}, 4), 3, ys, Real("1e-30"));
    for (const Real& o : run.orders)
        CHECK(o > Real("3.7"));
}
