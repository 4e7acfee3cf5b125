#include <doctest.h>

#include "bo/scan.hpp"
#include "helpers.hpp"

using namespace bo;

TEST_CASE("ratio table")
{
    const scan::Table t = scan::scan_F({1, 0}, 200);
    CHECK(t.n == 2);
    CHECK(t.rows.size() == 201);
    CHECK(t.at(4).coefficient == 1);
    CHECK(t.at(4).ratio == 0.8);
    CHECK(t.all_nonnegative());
    CHECK(t.csv().rfind("l,coefficient,partitions,ratio\n0,0,1,0\n", 0) == 0);
    CHECK(t.json().at("rows").size() == 201);
}

TEST_CASE("ratios drift upward")
{
    const scan::Table t = scan::scan_F({0}, 2000);
    CHECK(t.at(1000).ratio < t.at(2000).ratio);
    CHECK(t.at(2000).ratio < 1.0);
}

TEST_CASE("G columns")
{
    const forms::CoeffQuery q{{0}, {1}};
    const scan::Table even = scan::scan_G(q, 50, scan::GColumn::even);
    const scan::Table norm = scan::scan_G(q, 50, scan::GColumn::normalized);
    CHECK(even.kind == "G");
    CHECK(norm.rows.size() == 51);
    CHECK(even.at(1).coefficient == -1);  // q - q^2 + q^6: c_2 = -1
}
