#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bo/qseries.hpp"

inline bo::Exp8 Q(std::int64_t n)
{
    return bo::Exp8::integer(n);
}

// series({{"1", 1}, {"3", -1}}, Q(8)) = q - q^3 + O(q^8)
inline bo::QSeries series(std::initializer_list<std::pair<const char*, long>> terms, bo::Exp8 order)
{
    std::vector<bo::Term> t;
    for (const auto& [e, c] : terms)
        t.push_back({bo::Exp8::parse(e), bo::Integer(c)});
    return bo::QSeries::from_terms(t, order);
}
