#include "bo/one_point.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bo/closed_forms.hpp"

namespace bo {

QSeries eta_cubed(Exp8 order)
{
    std::vector<Term> terms;
    for (std::int64_t k = 0;; ++k) {
        const Exp8 e = Exp8{1} + Exp8::integer(k * (k + 1) / 2);
        if (e >= order)
            break;
        terms.push_back({e, Integer(k % 2 ? -(2 * k + 1) : 2 * k + 1)});
    }
    return QSeries::from_terms(terms, order);
}

ZetaLaurent bilateral_one_point(int J, Exp8 order)
{
    if (J < 0)
        throw std::domain_error("bilateral_one_point: negative window");
    ZetaLaurent out(order);
    for (int j = -J; j <= J; ++j) {
        QSeries f = j >= 0 ? forms::f_multisum({j}, order) : forms::g_multisum({{}, {-j - 1}}, order);
        out.add(2 * j + 1, f);
    }
    return out;
}

OnePointReport one_point_n1_check(int J, Exp8 order, const OnePointOptions& opt)
{
    ZetaLaurent f = bilateral_one_point(J, order);
    if (opt.f0_perturbation)
        f.add(1, *opt.f0_perturbation);
    const ZetaLaurent lhs = f * theta_t(order);
    ZetaLaurent rhs(order);
    rhs.add(0, opt.target == OnePointTarget::literal_one ? QSeries::one(order) : eta_cubed(order));

    OnePointReport rep;
    const std::int64_t half = J / 2;
    const std::int64_t jj = J;
    for (std::int64_t k = -half; k <= half; ++k) {
        // Lowest q-exponents reachable from the omitted j = J+1 and j = -J-1 terms.
        const std::int64_t above = 8 * (jj + 2) + (2 * jj + 3 - 2 * k) * (2 * jj + 3 - 2 * k);
        const std::int64_t below = (2 * (k + jj) + 1) * (2 * (k + jj) + 1);
        const Exp8 bound = std::min({order, Exp8{above}, Exp8{below}});
        const IdentityReport row = compare_cells(lhs, rhs, 2 * k, 2 * k, bound);
        rep.cells.cells_checked += row.cells_checked;
        rep.uncertified += static_cast<std::size_t>(order.eighths() - std::max<std::int64_t>(bound.eighths(), 0));
        if (!row.passed && rep.cells.passed) {
            rep.cells.passed = false;
            rep.cells.first_mismatch = row.first_mismatch;
        }
    }
    rep.cells.cells_skipped = rep.uncertified;
    return rep;
}

namespace {

// U(t) = sum_{k>=0} (-1)^k q^{k(k+1)/2} sum_{|i|<=k} t^i, so that
// Theta(t) = q^{1/8} (t^{1/2} - t^{-1/2}) U(t).
ZetaLaurent theta_cofactor(Exp8 order)
{
    ZetaLaurent u(order);
    for (std::int64_t k = 0; Exp8::integer(k * (k + 1) / 2) < order; ++k) {
        const QSeries c = QSeries::monomial(Exp8::integer(k * (k + 1) / 2), k % 2 ? -1 : 1, order);
        for (std::int64_t i = -k; i <= k; ++i)
            u.add(2 * i, c);
    }
    return u;
}

ZetaLaurent power(const ZetaLaurent& x, int l)
{
    ZetaLaurent out = ZetaLaurent::one(x.order());
    for (int i = 0; i < l; ++i)
        out = out * x;
    return out;
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

ZetaLaurent inverse_theta_power(int l, int W, Exp8 order)
{
    if (l < 1)
        throw std::domain_error("inverse_theta_power: power must be positive");
    if (W < 0)
        throw std::domain_error("inverse_theta_power: negative window");
    const Exp8 shift{l};  // q^{l/8}
    const Exp8 u_order = order + shift;

    // U = 1 - V with V = O(q); U^{-1} by fixed-point iteration, one q-order per pass.
    const ZetaLaurent u = theta_cofactor(u_order);
    const ZetaLaurent v = ZetaLaurent::one(u_order) - u;
    ZetaLaurent inv = ZetaLaurent::one(u_order);
    for (std::int64_t pass = 0; pass <= u_order.floor_integer(); ++pass)
        inv = ZetaLaurent::one(u_order) + v * inv;
    const ZetaLaurent ul = power(inv, l);

    // (t^{1/2} - t^{-1/2})^{-l} = t^{-l/2} sum_i C(i+l-1, l-1) t^{-i} for |t| > 1.
    ZetaLaurent out(order);
    for (std::int64_t x = -2 * W; x <= 2 * W; ++x) {
        if ((x - l) % 2 != 0)
            continue;
        for (const auto& [y, c] : ul.terms()) {
            const std::int64_t twice_i = y - l - x;
            if (twice_i < 0)
                continue;
            const std::int64_t i = twice_i / 2;
            out.add(x, binomial(i + l - 1, l - 1) * c.shifted(-shift));
        }
    }
    return out;
}

InverseThetaReport inverse_theta_check(int l, int W, Exp8 order)
{
    const Exp8 shift{l};
    const ZetaLaurent inv = inverse_theta_power(l, W, order);
    const ZetaLaurent th = power(theta_t(order + shift), l);
    const ZetaLaurent prod = inv * th;
    const ZetaLaurent one = ZetaLaurent::one(order);

    // Row x is exact below the first q-exponent at which Theta^l reaches a
    // t-exponent y with x - y outside the window.
    InverseThetaReport rep;
    const std::int64_t lo = -2 * W;
    const std::int64_t hi = 2 * W;
    for (std::int64_t x = lo; x <= hi; x += 2) {
        const std::int64_t margin = std::min(x - lo, hi - x);
        Exp8 bound = order;
        for (const auto& [y, c] : th.terms())
            if (std::abs(y) > margin)
                bound = std::min(bound, c.valuation() - shift);
        if (x == 0 && bound <= Exp8{0})
            throw std::domain_error("window of half-width " + std::to_string(W) +
                                    " cannot certify any coefficient of t^0 for power " + std::to_string(l));
        const Exp8 upto = std::max(bound, Exp8{0});
        const IdentityReport row = compare_cells(prod, one, x, x, upto);
        rep.cells.cells_checked += row.cells_checked;
        rep.uncertified += static_cast<std::size_t>(order.eighths() - upto.eighths());
        if (!row.passed && rep.cells.passed) {
            rep.cells.passed = false;
            rep.cells.first_mismatch = row.first_mismatch;
        }
    }
    rep.cells.cells_skipped = rep.uncertified;
    return rep;
}

}  // namespace bo
