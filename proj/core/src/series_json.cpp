#include "bo/series_json.hpp"

#include <stdexcept>

namespace bo {

Json to_json(const QSeries& s)
{
    Json coeffs = Json::array();
    if (!s.is_zero()) {
        const std::int64_t v = s.valuation().eighths();
        std::vector<std::string> dense(static_cast<std::size_t>(s.last_exponent().eighths() - v + 1), "0");
        s.for_each_term([&](Exp8 e, const Integer& c) { dense[static_cast<std::size_t>(e.eighths() - v)] = c.get_str(); });
        coeffs = dense;
    }
    return Json{{"scale", 8},
                {"valuation", s.valuation().eighths()},
                {"order", s.order().eighths()},
                {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const Json& j)
{
    if (j.at("scale").get<int>() != 8)
        throw std::invalid_argument("series json: only scale 8 is supported");
    const Exp8 v{j.at("valuation").get<std::int64_t>()};
    const Exp8 o{j.at("order").get<std::int64_t>()};
    std::vector<Integer> c;
    for (const auto& x : j.at("coeffs"))
        c.emplace_back(x.get<std::string>());
    return QSeries::from_dense(v, 1, std::move(c), o);
}

Json to_json(const Rational& x)
{
    return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Rational rational_from_json(const Json& j)
{
    Rational r(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    r.canonicalize();
    return r;
}

Json terms_json(const QSeries& s)
{
    Json out = Json::array();
    s.for_each_term([&](Exp8 e, const Integer& c) { out.push_back({{"exp", e.to_string()}, {"coeff", c.get_str()}}); });
    return out;
}

}  // namespace bo
