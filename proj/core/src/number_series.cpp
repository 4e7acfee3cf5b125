#include "bo/number_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bo {

namespace {

void require_positive(Exp8 order, const char* what)
{
    if (order <= Exp8{0})
        throw std::domain_error(std::string(what) + ": order must be positive, got q^" + order.to_string());
}

// Number of integer exponents strictly below order (order > 0).
std::int64_t integers_below(Exp8 order)
{
    return (order.eighths() + 7) / 8;
}

}  // namespace

QSeries euler_pochhammer(Exp8 order)
{
    require_positive(order, "euler_pochhammer");
    std::vector<Term> terms{{Exp8{0}, Integer(1)}};
    for (std::int64_t k = 1;; ++k) {
        const Exp8 a = Exp8::integer(k * (3 * k - 1) / 2);
        const Exp8 b = Exp8::integer(k * (3 * k + 1) / 2);
        if (a >= order)
            break;
        const Integer sign = k % 2 ? -1 : 1;
        terms.push_back({a, sign});
        if (b < order)
            terms.push_back({b, sign});
    }
    return QSeries::from_terms(terms, order);
}

std::vector<Integer> partition_numbers(std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("partition_numbers: negative bound " + std::to_string(n));
    std::vector<Integer> p(static_cast<std::size_t>(n + 1));
    p[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        Integer acc;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t a = m - k * (3 * k - 1) / 2;
            if (a < 0)
                break;
            const std::int64_t b = m - k * (3 * k + 1) / 2;
            if (k % 2) {
                acc += p[static_cast<std::size_t>(a)];
                if (b >= 0)
                    acc += p[static_cast<std::size_t>(b)];
            } else {
                acc -= p[static_cast<std::size_t>(a)];
                if (b >= 0)
                    acc -= p[static_cast<std::size_t>(b)];
            }
        }
        p[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return p;
}

QSeries partition_series(Exp8 order)
{
    require_positive(order, "partition_series");
    return QSeries::from_dense(Exp8{0}, 8, partition_numbers(integers_below(order) - 1), order);
}

ZetaLaurent theta_t(std::int64_t lo_halves, std::int64_t hi_halves, Exp8 order)
{
    ZetaLaurent out(order);
    for (std::int64_t h = lo_halves; h <= hi_halves; ++h) {
        if (h % 2 == 0)
            continue;
        // h = 2l+1; (l+1/2)^2/2 = h^2/8.
        const Exp8 e{h * h};
        if (e >= order)
            continue;
        const std::int64_t l = (h - 1) / 2;
        out.add(h, QSeries::monomial(e, l % 2 ? -1 : 1, order));
    }
    return out;
}

ZetaLaurent theta_t(Exp8 order)
{
    std::int64_t h = 1;
    while (h * h < order.eighths())
        h += 2;
    return theta_t(-h, h, order);
}

ZetaLaurent theta_kernel(Exp8 order)
{
    ZetaLaurent out(order);
    for (std::int64_t l = 0; Exp8::halves(l * l) < order; ++l) {
        const QSeries c = QSeries::monomial(Exp8::halves(l * l), 1, order);
        out.add(2 * l, c);
        if (l)
            out.add(-2 * l, c);
    }
    return out;
}

IdentityReport compare_cells(const ZetaLaurent& lhs, const ZetaLaurent& rhs, std::int64_t lo_halves,
                             std::int64_t hi_halves, Exp8 below)
{
    if (lhs.order() < below || rhs.order() < below)
        throw std::domain_error("compare_cells: operands known only to q^" +
                                std::min(lhs.order(), rhs.order()).to_string() + ", asked for q^" +
                                below.to_string());
    IdentityReport rep;
    const Exp8 floor = std::min({Exp8{0}, lhs.min_valuation(), rhs.min_valuation()});
    const auto per_row = static_cast<std::size_t>(std::max<std::int64_t>(0, below.eighths() - floor.eighths()));
    for (std::int64_t h = lo_halves; h <= hi_halves; ++h) {
        rep.cells_checked += per_row;
        if (rep.first_mismatch)
            continue;
        const QSeries a = lhs.at(h).truncated(below);
        const QSeries b = rhs.at(h).truncated(below);
        const QSeries d = a - b;
        if (d.is_zero())
            continue;
        const Exp8 e = d.valuation();
        rep.passed = false;
        rep.first_mismatch = CellMismatch{h, e, a.coefficient(e), b.coefficient(e)};
    }
    return rep;
}

ZetaLaurent jtp_product_side(Exp8 order)
{
    require_positive(order, "jtp_product_side");
    ZetaLaurent acc = ZetaLaurent::monomial(0, euler_pochhammer(order), order);
    for (std::int64_t k = 0; Exp8::halves(2 * k + 1) < order; ++k) {
        const QSeries m = QSeries::monomial(Exp8::halves(2 * k + 1), 1, order);
        ZetaLaurent f = ZetaLaurent::one(order);
        f.add(2, m);
        f.add(-2, m);
        ZetaLaurent g = ZetaLaurent::monomial(0, m * m, order);
        // (1 + zeta x)(1 + x/zeta) = 1 + x^2 + zeta x + x/zeta
        acc = acc * (f + g);
    }
    return acc;
}

ZetaLaurent jtp_sum_side(Exp8 order)
{
    return theta_kernel(order);
}

IdentityReport jtp_check(Exp8 order, std::int64_t lo, std::int64_t hi)
{
    return compare_cells(jtp_product_side(order), jtp_sum_side(order), 2 * lo, 2 * hi, order);
}

ZetaLaurent geometric_factor(FactorSide side, int index, Exp8 order)
{
    if (index < 0)
        throw std::domain_error("geometric_factor: negative mode index " + std::to_string(index));
    ZetaLaurent out(order);
    const std::int64_t step = 2 * index + 1;  // (index + 1/2) in halves
    for (std::int64_t l = 0;; ++l) {
        const std::int64_t k = side == FactorSide::positive ? l + 1 : l;
        const Exp8 e = Exp8::halves(k * step);
        if (e >= order)
            break;
        const std::int64_t key = side == FactorSide::positive ? -2 * k : 2 * k;
        out.add(key, QSeries::monomial(e, l % 2 ? -1 : 1, order));
    }
    return out;
}

ZetaLaurent ct_integrand(std::span<const int> pos, std::span<const int> neg, Exp8 order)
{
    ZetaLaurent acc = theta_kernel(order);
    for (int r : pos)
        acc = acc * geometric_factor(FactorSide::positive, r, order);
    for (int s : neg)
        acc = acc * geometric_factor(FactorSide::negative, s, order);
    return acc;
}

}  // namespace bo
