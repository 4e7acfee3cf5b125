#include <doctest.h>

#include <fstream>

#include "bo/false_theta.hpp"
#include "helpers.hpp"

using namespace bo;
using namespace bo::ft;

TEST_CASE("Laurent polynomial division")
{
    const LaurentPoly a = LaurentPoly::one_minus(4) * LaurentPoly::one_minus(3);
    CHECK(a.divided_by(LaurentPoly::one_minus(3)) == LaurentPoly::one_minus(4));
    CHECK_THROWS_AS(a.divided_by(LaurentPoly::one_minus(5)), ConsistencyError);
    CHECK(LaurentPoly::monomial(-3, Rational(-2)).to_string() == "-2*q^(-3/2)");
    CHECK_THROWS_AS(LaurentPoly::monomial(1, Rational(1, 2)).to_series(Q(4)), ConsistencyError);
}

TEST_CASE("Psi and its tails")
{
    CHECK(psi(Q(15)) == series({{"0", 1}, {"1", -1}, {"3", 1}, {"6", -1}, {"10", 1}}, Q(15)));
    const FalseThetaPair t = tail_to_pair(2);
    CHECK(t.expand(Q(15)) == series({{"3", 1}, {"6", -1}, {"10", 1}}, Q(15)));
    CHECK_THROWS(tail_to_pair(-1));
    const ShiftedFalseTheta s{-1, 3, 2};
    CHECK(s.to_pair().expand(Q(30)) == s.expand(Q(30)));
}

TEST_CASE("n=1 closed form")
{
    const FalseThetaPair p0 = decompose_F({0});
    CHECK(p0.P == LaurentPoly::constant(-1));
    CHECK(p0.Q == LaurentPoly::constant(1));
    for (int r = 0; r <= 10; ++r) {
        CAPTURE(r);
        CHECK(decompose_F({r}) == n1_closed_form(r));
    }
}

TEST_CASE("decomposition reproduces the cleared series")
{
    for (const forms::CoeffQuery& q : {forms::CoeffQuery{{3, 1}, {2}}, forms::CoeffQuery{{}, {4, 1, 0}},
                                       forms::CoeffQuery{{6, 5, 3, 0}, {}}, forms::CoeffQuery{{4}, {6, 2, 1}}}) {
        CAPTURE(q.to_string());
        const Decomposition d = decompose(q);
        CHECK(verify_pair(d.pair, cleared_target(q, Q(300)), Q(300)));
        CHECK(d.within_bounds());
        CHECK(d.pair == decompose(q, PivotRule::reversed).pair);
    }
}

TEST_CASE("a wrong pair is caught")
{
    const forms::CoeffQuery q{{2}, {0}};
    FalseThetaPair p = decompose(q).pair;
    p.Q.add(40, Rational(1));
    CHECK_FALSE(verify_pair(p, cleared_target(q, Q(100)), Q(100)));
    CHECK(verify_pair(p, cleared_target(q, Q(20)), Q(20)));
}

TEST_CASE("pair json round trip")
{
    const FalseThetaPair p = decompose({{3, 1}, {2}}).pair;
    CHECK(pair_from_json(to_json(p)) == p);
}

TEST_CASE("frozen n=1 pairs")
{
    std::ifstream f(BOFOURIER_GOLDEN_DIR "/n1_pairs.json");
    REQUIRE(f);
    const Json j = Json::parse(f);
    for (const auto& [key, pair] : j.at("pairs").items()) {
        const int r = std::stoi(key);
        CAPTURE(r);
        CHECK(pair_from_json(pair) == n1_closed_form(r));
        CHECK(pair_from_json(pair) == decompose_F({r}));
    }
    CHECK(j.at("pairs").size() == 11);
}
