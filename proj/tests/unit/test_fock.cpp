#include <doctest.h>

#include "bo/fock.hpp"
#include "bo/number_series.hpp"
#include "helpers.hpp"

using namespace bo;
using namespace bo::fock;
using K = ModeRequest::Kind;

TEST_CASE("states by weight are counted by p(w)")
{
    CHECK(state_count_series(Q(20)) == partition_series(Q(20)));
    const FockState s{{2, 0}, {1}};
    CHECK(s.weight() == 2 + 0 + 1 + 1);
    CHECK(s.charge() == 1);
    const auto states = enumerate_states(Q(6));
    CHECK(states.size() == 1 + 1 + 2 + 3 + 5 + 7);
    CHECK(std::is_sorted(states.begin(), states.end(), [](const auto& a, const auto& b) { return a.weight() < b.weight(); }));
}

TEST_CASE("compress folds repeated modes")
{
    const std::vector<ModeRequest> raw{{K::pos, 3}, {K::pos, 3}};
    CHECK(compress(raw).entries == std::vector<ModeRequest>{{K::pos, 3}});
    const std::vector<ModeRequest> bad{{K::neg, -1}};
    CHECK_THROWS(compress(bad));
}

TEST_CASE("oracle values")
{
    const int zero[1] = {0};
    CHECK(oracle_coefficient(make_spec(zero, {}), Q(8)) == series({{"1", 1}, {"3", -1}, {"6", 1}}, Q(8)));
    CHECK(oracle_coefficient(make_spec({}, zero), Q(8)) == series({{"0", 1}, {"1", -1}, {"3", 1}, {"6", -1}}, Q(8)));
    const int ten[2] = {1, 0};
    CHECK(oracle_coefficient(make_spec(ten, {}), Q(9)) == series({{"4", 1}, {"7", -1}, {"8", -1}}, Q(9)));
}

TEST_CASE("sharded trace is identical")
{
    const int pos[2] = {3, 1};
    const int neg[1] = {2};
    const ExponentSpec spec = make_spec(pos, neg);
    const QSeries one = raw_trace(spec, Q(18), 1);
    for (int shards : {2, 3, 7})
        CHECK(raw_trace(spec, Q(18), shards) == one);
}

TEST_CASE("collision record keeps both paths and the zero claim")
{
    const CollisionReport r = collision_report(0, Q(6));
    CHECK(r.paths_agree());
    CHECK(r.vanishing_claim.is_zero());
    CHECK(r.vanishing_claim.order() == Q(6));
    CHECK(r.oracle == series({{"2", 1}, {"4", -1}, {"5", -1}}, Q(6)));
    CHECK(make_spec(std::vector<int>{2}, std::vector<int>{2}).has_collision());
}

TEST_CASE("pairs of odd-part partitions")
{
    const std::vector<int> r{2, 0};
    const QSeries lhs = partition_pair_count(r, Q(20));
    CHECK(lhs == oracle_coefficient(make_spec(r, {}), Q(20)) * partition_series(Q(20)));
    CHECK(lhs.valuation() == Q(5));  // 2 + 5/2 + 1/2
    CHECK_THROWS(partition_pair_count(std::vector<int>{0, 2}, Q(4)));
}
