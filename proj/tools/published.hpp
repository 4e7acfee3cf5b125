#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bo/qseries.hpp"

namespace published {

// "q - q^3 + q^6 + O(q^8)"; fractional exponents in parentheses.
std::string pretty(const bo::QSeries& s);

// A value printed in the literature, with the code that recomputes it.
struct Example {
    std::string name;
    std::string expected;
    std::function<std::string()> compute;
};

const std::vector<Example>& examples();

}  // namespace published
