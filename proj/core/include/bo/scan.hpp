#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bo/closed_forms.hpp"
#include "bo/series_json.hpp"

namespace bo::scan {

struct Row {
    std::int64_t l;
    Integer coefficient;
    Integer partitions;
    double ratio;  // 2^n coefficient / p(l)
};

struct Table {
    std::string kind;   // "F" or "G"
    std::string column; // what `coefficient` holds
    int n = 0;
    std::vector<Row> rows;

    const Row& at(std::int64_t l) const;
    bool all_nonnegative() const;
    std::string csv() const;
    Json json() const;
};

// b_l = [q^l] f_multisum(r) / (q;q)_inf for l = 0..L.
Table scan_F(const std::vector<int>& r, std::int64_t L);

enum class GColumn {
    even,        // c_{2l}, the literal coefficient at q^{2l}
    odd,         // c_{2l+1}
    normalized,  // [q^l] g_multisum / (q;q)_inf
};
Table scan_G(const forms::CoeffQuery& q, std::int64_t L, GColumn column);

}  // namespace bo::scan
