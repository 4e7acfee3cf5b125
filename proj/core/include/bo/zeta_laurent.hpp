#pragma once

#include <cstdint>
#include <map>

#include "bo/qseries.hpp"

namespace bo {

// Finite Laurent polynomial in a formal variable (zeta, or t) whose
// coefficients are truncated q-series sharing one order.
//
// Keys are exponents of the formal variable measured in halves, so both the
// integer powers of zeta and the half-integer powers t^{l+1/2} fit.
// Terms whose q-series is zero below the order are never stored.
class ZetaLaurent {
public:
    using Map = std::map<std::int64_t, QSeries>;

    explicit ZetaLaurent(Exp8 order) : order_(order) {}

    static ZetaLaurent monomial(std::int64_t halves, const QSeries& coefficient, Exp8 order);
    // 1 (i.e. zeta^0 * q^0) to the given order.
    static ZetaLaurent one(Exp8 order);

    Exp8 order() const { return order_; }
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Coefficient of the formal variable to the power halves/2; the zero
    // series when absent.
    QSeries at(std::int64_t halves) const;

    // Adds c (truncated to order()) to the coefficient at halves. Throws
    // std::logic_error when c is known to a lower order than order().
    void add(std::int64_t halves, const QSeries& c);

    // min over stored terms of valuation - |w|/2, where w is the variable
    // exponent. A non-negative value means every term with |exponent| = w has
    // q-valuation at least w/2. Returns order() for the empty polynomial.
    Exp8 support_slack() const;
    // Smallest q-valuation over all terms (order() when empty).
    Exp8 min_valuation() const;

    ZetaLaurent truncated(Exp8 new_order) const;
    // Multiplies every coefficient by s (orders combine as for QSeries).
    ZetaLaurent scaled(const QSeries& s) const;

    friend ZetaLaurent operator+(const ZetaLaurent& a, const ZetaLaurent& b);
    friend ZetaLaurent operator-(const ZetaLaurent& a, const ZetaLaurent& b);
    friend ZetaLaurent operator*(const ZetaLaurent& a, const ZetaLaurent& b);

private:
    Exp8 order_;
    Map terms_;
};

// Constant term with respect to the formal variable.
QSeries ct_zeta(const ZetaLaurent& f);

}  // namespace bo
