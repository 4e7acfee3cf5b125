#include <doctest.h>

#include "bo/number_series.hpp"
#include "bo/series_json.hpp"
#include "bo/zeta_laurent.hpp"
#include "helpers.hpp"

using namespace bo;

TEST_CASE("exponents print as reduced fractions")
{
    CHECK(Exp8::halves(7).to_string() == "7/2");
    CHECK(Exp8{9}.to_string() == "9/8");
    CHECK(Exp8{-4}.to_string() == "-1/2");
    CHECK(Exp8::parse("3/4") == Exp8{6});
    CHECK(Exp8::parse("-5") == Q(-5));
    CHECK_THROWS_AS(Exp8::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(Exp8::parse("x"), std::invalid_argument);
    CHECK(Exp8{-1}.floor_integer() == -1);
}

TEST_CASE("orders propagate pessimistically")
{
    const QSeries a = series({{"1/2", 1}, {"2", 3}}, Q(5));
    const QSeries b = series({{"1", 2}}, Q(3));
    CHECK((a + b).order() == Q(3));
    // (q^{1/2} + ...)(2q + O(q^3)): known below q^{1/2} + 3
    CHECK((a * b).order() == Exp8::halves(7));
    CHECK((a * b).coefficient(Exp8::halves(3)) == 2);
    CHECK(a.truncated(Q(1)).term_count() == 1);
}

TEST_CASE("pentagonal series and partition numbers")
{
    CHECK(euler_pochhammer(Q(6)) == series({{"0", 1}, {"1", -1}, {"2", -1}, {"5", 1}}, Q(6)));
    const auto p = partition_numbers(100);
    CHECK(p[5] == 7);
    CHECK(p[10] == 42);
    CHECK(p[100] == Integer("190569292"));
    CHECK(euler_pochhammer(Q(40)).reciprocal() == partition_series(Q(40)));
    CHECK_THROWS_AS(euler_pochhammer(Q(0)), std::domain_error);
}

TEST_CASE("theta coefficients on the eighth grid")
{
    const ZetaLaurent th = theta_t(Q(4));
    CHECK(th.at(1) == series({{"1/8", 1}}, Q(4)));
    CHECK(th.at(-1) == series({{"1/8", -1}}, Q(4)));
    CHECK(th.at(3) == series({{"9/8", -1}}, Q(4)));
    CHECK(th.at(2).is_zero());
}

TEST_CASE("triple product")
{
    const IdentityReport r = jtp_check(Q(50), -8, 8);
    CHECK(r.passed);
    CHECK(r.cells_checked == 33 * 400);  // half-integer zeta keys included
    CHECK_FALSE(r.first_mismatch);
}

TEST_CASE("compare_cells refuses to look past the known order")
{
    const ZetaLaurent a = ZetaLaurent::one(Q(4));
    CHECK_THROWS_AS(compare_cells(a, a, 0, 0, Q(5)), std::domain_error);
    ZetaLaurent b = ZetaLaurent::one(Q(4));
    b.add(2, series({{"3/2", 2}}, Q(4)));
    const IdentityReport r = compare_cells(a, b, -2, 2, Q(4));
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->var_halves == 2);
    CHECK(r.first_mismatch->q_exponent == Exp8::halves(3));
    CHECK(r.first_mismatch->rhs == 2);
}

TEST_CASE("constant term of the n=1 integrand")
{
    const int r[1] = {0};
    CHECK(ct_zeta(ct_integrand(r, {}, Q(10))) == series({{"1", 1}, {"3", -1}, {"6", 1}}, Q(10)));
    const ZetaLaurent f = geometric_factor(FactorSide::positive, 0, Q(4));
    CHECK(f.terms().rbegin()->first == -2);
    CHECK(f.at(-2) == series({{"1/2", 1}}, Q(4)));
    CHECK_THROWS_AS(geometric_factor(FactorSide::negative, -1, Q(4)), std::domain_error);
}

TEST_CASE("series json round trip")
{
    const QSeries s = series({{"-1/8", 3}, {"7/2", -11}, {"20", 1}}, Exp8{171});
    const Json j = to_json(s);
    CHECK(j.at("scale") == 8);
    CHECK(j.at("valuation") == -1);
    CHECK(j.at("order") == 171);
    CHECK(qseries_from_json(j) == s);
    CHECK(terms_json(s)[1].at("exp") == "7/2");
    CHECK(rational_from_json(to_json(Rational(3, 2))) == Rational(3, 2));
    CHECK(rational_from_json(Json{{"num", "6"}, {"den", "4"}}) == Rational(3, 2));
}
