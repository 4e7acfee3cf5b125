#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bo/exp8.hpp"

namespace bo {

using Integer = mpz_class;
using Rational = mpq_class;

struct Term {
    Exp8 exponent;
    Integer coefficient;
};

// Truncated formal series in q with integer coefficients.
//
// Coefficients are stored densely on an arithmetic grid
// valuation + i * stride (stride in eighths, always a divisor of 8). The
// order is exclusive: every coefficient strictly below order() is exact, and
// nothing at or beyond it is ever reported. Arithmetic propagates the order
// pessimistically (min of operand orders, shifted by valuations under
// multiplication).
//
// Canonical form: either the zero series (no stored coefficients) or a
// series whose first and last stored coefficients are nonzero.
class QSeries {
public:
    // The zero series known to order 0, i.e. nothing is known.
    QSeries() = default;

    static QSeries zero(Exp8 order);
    static QSeries one(Exp8 order);
    static QSeries monomial(Exp8 exponent, Integer coefficient, Exp8 order);
    // Sums duplicate exponents; drops terms at or beyond order.
    static QSeries from_terms(std::span<const Term> terms, Exp8 order);
    // coeffs[i] is the coefficient of q^{valuation + i*stride}.
    static QSeries from_dense(Exp8 valuation, std::int64_t stride, std::vector<Integer> coeffs, Exp8 order);

    Exp8 order() const { return order_; }
    // For the zero series this is the order: all known coefficients vanish.
    Exp8 valuation() const { return coeffs_.empty() ? order_ : valuation_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t stride() const { return stride_; }

    // Throws std::out_of_range when e >= order().
    Integer coefficient(Exp8 e) const;
    const Integer& leading_coefficient() const;
    std::vector<Term> terms() const;
    std::size_t term_count() const;
    // Exponent of the last nonzero coefficient (valuation() for zero series).
    Exp8 last_exponent() const;

    template <typename F>
    void for_each_term(F&& f) const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0)
                f(Exp8{valuation_.eighths() + static_cast<std::int64_t>(i) * stride_}, coeffs_[i]);
    }

    QSeries truncated(Exp8 new_order) const;
    QSeries shifted(Exp8 by) const;
    // Requires a leading coefficient of +1 or -1; the result has order
    // order() - 2*valuation().
    QSeries reciprocal() const;

    // True when both series agree on every exponent below min(bound, orders).
    bool agrees_below(const QSeries& other, Exp8 bound) const;

    QSeries operator-() const;
    QSeries& operator*=(const Integer& k);
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Integer& k, QSeries a) { a *= k; return a; }

    // Same order and same coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    QSeries(Exp8 valuation, std::int64_t stride, std::vector<Integer> coeffs, Exp8 order);
    void normalize();

    Exp8 valuation_{};
    std::int64_t stride_ = 8;
    std::vector<Integer> coeffs_;
    Exp8 order_{};
};

}  // namespace bo
