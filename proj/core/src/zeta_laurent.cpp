#include "bo/zeta_laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bo {

ZetaLaurent ZetaLaurent::monomial(std::int64_t halves, const QSeries& coefficient, Exp8 order)
{
    ZetaLaurent out(order);
    out.add(halves, coefficient);
    return out;
}

ZetaLaurent ZetaLaurent::one(Exp8 order)
{
    return monomial(0, QSeries::one(order), order);
}

QSeries ZetaLaurent::at(std::int64_t halves) const
{
    auto it = terms_.find(halves);
    return it == terms_.end() ? QSeries::zero(order_) : it->second;
}

void ZetaLaurent::add(std::int64_t halves, const QSeries& c)
{
    if (c.order() < order_)
        throw std::logic_error("coefficient known only to q^" + c.order().to_string() +
                               " added to a series of order q^" + order_.to_string());
    if (c.is_zero() || c.valuation() >= order_)
        return;
    QSeries t = c.order() > order_ ? c.truncated(order_) : c;
    auto it = terms_.find(halves);
    if (it == terms_.end()) {
        terms_.emplace(halves, std::move(t));
        return;
    }
    it->second = it->second + t;
    if (it->second.is_zero())
        terms_.erase(it);
}

Exp8 ZetaLaurent::support_slack() const
{
    Exp8 slack = order_;
    for (const auto& [h, s] : terms_)
        slack = std::min(slack, s.valuation() - Exp8{2 * std::abs(h)});  // |w|/2 = |h|/4 = 2|h| eighths
    return slack;
}

Exp8 ZetaLaurent::min_valuation() const
{
    Exp8 v = order_;
    for (const auto& [h, s] : terms_)
        v = std::min(v, s.valuation());
    return v;
}

ZetaLaurent ZetaLaurent::truncated(Exp8 new_order) const
{
    if (new_order > order_)
        throw std::domain_error("cannot extend a Laurent series from order q^" + order_.to_string() + " to q^" +
                                new_order.to_string());
    ZetaLaurent out(new_order);
    for (const auto& [h, s] : terms_)
        out.add(h, s.truncated(std::min(new_order, s.order())));
    return out;
}

ZetaLaurent ZetaLaurent::scaled(const QSeries& s) const
{
    const Exp8 zero{0};
    ZetaLaurent out(std::min(order_ + std::min(zero, s.valuation()), s.order() + std::min(zero, min_valuation())));
    for (const auto& [h, c] : terms_)
        out.add(h, c * s);
    return out;
}

ZetaLaurent operator+(const ZetaLaurent& a, const ZetaLaurent& b)
{
    ZetaLaurent out = a.truncated(std::min(a.order(), b.order()));
    for (const auto& [h, s] : b.terms())
        out.add(h, s);
    return out;
}

ZetaLaurent operator-(const ZetaLaurent& a, const ZetaLaurent& b)
{
    ZetaLaurent out = a.truncated(std::min(a.order(), b.order()));
    for (const auto& [h, s] : b.terms())
        out.add(h, -s);
    return out;
}

ZetaLaurent operator*(const ZetaLaurent& a, const ZetaLaurent& b)
{
    const Exp8 zero{0};
    ZetaLaurent out(std::min(a.order() + std::min(zero, b.min_valuation()),
                             b.order() + std::min(zero, a.min_valuation())));
    for (const auto& [ha, sa] : a.terms())
        for (const auto& [hb, sb] : b.terms()) {
            if (sa.valuation() + sb.valuation() >= out.order())
                continue;
            out.add(ha + hb, sa * sb);
        }
    return out;
}

QSeries ct_zeta(const ZetaLaurent& f)
{
    return f.at(0);
}

}  // namespace bo
