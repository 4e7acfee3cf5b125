#pragma once

#include <string>

#include "json.hpp"

#include "bo/qseries.hpp"

namespace bo {

using Json = nlohmann::json;

// {"scale": 8, "valuation": v, "order": o, "coeffs": ["c0", "c1", ...]}
// valuation and order are in eighths; coeffs[i] is the coefficient of
// q^{(valuation + i)/8}, dense on the 1/8 grid up to the last nonzero term.
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// Exact rational as {"num": "...", "den": "..."}.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

// Sparse listing [{"exp": "7/2", "coeff": "-3"}, ...] for human-facing output.
Json terms_json(const QSeries& s);

}  // namespace bo
