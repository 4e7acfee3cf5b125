#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bo/closed_forms.hpp"
#include "bo/series_json.hpp"

namespace bo::verify {

struct Outcome {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Every well-formed query with indices <= max_index and 1 <= n <= max_n
// (pos and neg disjoint), in a fixed order.
std::vector<forms::CoeffQuery> query_grid(int max_index = 6, int max_n = 4);

// The numbered acceptance criteria, 1..10.
struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
};
std::vector<Criterion> criteria();

// Further structural properties (idempotence, diagonality, order propagation, ...).
std::vector<Criterion> properties();

Outcome run_timed(const Criterion& c);
Json to_json(const Outcome& o);

}  // namespace bo::verify
