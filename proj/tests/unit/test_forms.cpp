#include <doctest.h>

#include "bo/closed_forms.hpp"
#include "bo/fock.hpp"
#include "helpers.hpp"

using namespace bo;
using namespace bo::forms;

namespace {

void validate(std::vector<int> pos, std::vector<int> neg, bool allow_collision = false)
{
    CoeffQuery{std::move(pos), std::move(neg)}.validate(allow_collision);
}

}  // namespace

TEST_CASE("query validation")
{
    CHECK_NOTHROW(validate({3, 1}, {2, 0}));
    CHECK_THROWS_AS(validate({1, 3}, {}), MalformedQuery);
    CHECK_THROWS_AS(validate({2, 2}, {}), MalformedQuery);
    CHECK_THROWS_AS(validate({}, {-1}), MalformedQuery);
    CHECK_THROWS_AS(validate({2}, {2}), MalformedQuery);
    CHECK_NOTHROW(validate({2}, {2}, true));
    CHECK_THROWS_WITH(validate({1, 0}, {0}), doctest::Contains("r_j != s_k"));
    const CoeffQuery q{{1}, {0}};
    CHECK(q.to_string() == "pos=(1) neg=(0)");
}

TEST_CASE("single-index sums")
{
    CHECK(f_multisum({0}, Q(12)) == series({{"1", 1}, {"3", -1}, {"6", 1}, {"10", -1}}, Q(12)));
    CHECK(g_multisum({{}, {0}}, Q(10)) == series({{"0", 1}, {"1", -1}, {"3", 1}, {"6", -1}}, Q(10)));
    CHECK(example_n1_neg(0, Q(10)) == g_multisum({{}, {0}}, Q(10)));
    CHECK(f_multisum({4}, Q(60)) == g_multisum({{4}, {}}, Q(60)));
}

TEST_CASE("mixed query, three routes")
{
    const CoeffQuery q{{0}, {1}};
    const QSeries want = series({{"1", 1}, {"2", -1}, {"6", 1}}, Q(7));
    CHECK(g_multisum(q, Q(7)) == want);
    CHECK(ct_formula(q, Q(7)) == want);
    CHECK(example_n2_mixed(0, 1, Q(7)) == want);
    CHECK(example_n2_mixed(3, 1, Q(40)) == g_multisum({{3}, {1}}, Q(40)));
}

TEST_CASE("two-index closed form in both index orders")
{
    const QSeries f = f_multisum({3, 1}, Q(80));
    CHECK(example_n2_pos(3, 1, Q(80)) == f);
    CHECK(example_n2_pos(1, 3, Q(80)) == f);
    CHECK_THROWS(example_n2_pos(2, 2, Q(10)));
}

TEST_CASE("geometric inverse on both sides")
{
    CHECK(geometric_inverse(2, Q(4)) == series({{"0", 1}, {"1", 1}, {"2", 1}, {"3", 1}}, Q(4)));
    const QSeries neg = geometric_inverse(-3, Q(5));
    CHECK(neg.order() == Exp8::halves(13));
    CHECK(neg.truncated(Q(5)) == series({{"3/2", -1}, {"3", -1}, {"9/2", -1}}, Q(5)));
    CHECK_THROWS(geometric_inverse(0, Q(4)));
}

TEST_CASE("multi-sum agrees with the trace on a small grid")
{
    for (const CoeffQuery& q : {CoeffQuery{{2, 0}, {1}}, CoeffQuery{{}, {3, 2, 0}}, CoeffQuery{{5, 1}, {4, 2}}}) {
        CAPTURE(q.to_string());
        CHECK(g_multisum(q, Q(18)) == fock::oracle_coefficient(fock::make_spec(q.pos, q.neg), Q(18)));
    }
}

TEST_CASE("coefficient table, first six entries")
{
    const QSeries f = f_multisum({5, 4, 3, 2}, Q(720));
    CHECK(f.coefficient(Q(43)) == 2);
    CHECK(f.coefficient(Q(100)) == -7);
    CHECK(f.coefficient(Q(153)) == 18);
    CHECK(f.coefficient(Q(245)) == -2);
    CHECK(f.coefficient(Q(538)) == -81);
    CHECK(f.coefficient(Q(713)) == 112);
}
