#include "bo/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bo {

namespace {

// Number of grid points base + i*stride strictly below order.
std::int64_t points_below(Exp8 base, std::int64_t stride, Exp8 order)
{
    const std::int64_t span = order.eighths() - base.eighths();
    if (span <= 0)
        return 0;
    return (span + stride - 1) / stride;
}

bool divides_eight(std::int64_t s)
{
    return s > 0 && 8 % s == 0;
}

}  // namespace

QSeries::QSeries(Exp8 valuation, std::int64_t stride, std::vector<Integer> coeffs, Exp8 order)
    : valuation_(valuation), stride_(stride), coeffs_(std::move(coeffs)), order_(order)
{
    normalize();
}

void QSeries::normalize()
{
    // Drop anything at or beyond the order.
    const std::int64_t keep = points_below(valuation_, stride_, order_);
    if (static_cast<std::int64_t>(coeffs_.size()) > keep)
        coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(keep, 0)));

    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
    std::size_t first = 0;
    while (first < coeffs_.size() && sgn(coeffs_[first]) == 0)
        ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = order_;
        stride_ = 8;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        valuation_ += Exp8{static_cast<std::int64_t>(first) * stride_};
    }

    // Coarsen the grid when every nonzero index shares a common factor.
    std::int64_t g = 0;
    for (std::size_t i = 1; i < coeffs_.size() && g != 1; ++i)
        if (sgn(coeffs_[i]) != 0)
            g = std::gcd(g, static_cast<std::int64_t>(i));
    const std::int64_t coarse = g == 0 ? 8 : std::gcd(stride_ * g, std::int64_t{8});
    if (coarse != stride_) {
        const std::int64_t step = coarse / stride_;
        std::vector<Integer> packed;
        packed.reserve(coeffs_.size() / static_cast<std::size_t>(step) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(step))
            packed.push_back(std::move(coeffs_[i]));
        coeffs_ = std::move(packed);
        stride_ = coarse;
    }
}

QSeries QSeries::zero(Exp8 order)
{
    return QSeries(order, 8, {}, order);
}

QSeries QSeries::one(Exp8 order)
{
    return monomial(Exp8{0}, Integer(1), order);
}

QSeries QSeries::monomial(Exp8 exponent, Integer coefficient, Exp8 order)
{
    std::vector<Integer> c;
    c.push_back(std::move(coefficient));
    return QSeries(exponent, 8, std::move(c), order);
}

QSeries QSeries::from_terms(std::span<const Term> terms, Exp8 order)
{
    std::vector<const Term*> live;
    for (const auto& t : terms)
        if (t.exponent < order)
            live.push_back(&t);
    if (live.empty())
        return zero(order);
    Exp8 lo = live.front()->exponent;
    Exp8 hi = lo;
    for (const auto* t : live) {
        lo = std::min(lo, t->exponent);
        hi = std::max(hi, t->exponent);
    }
    std::int64_t stride = 8;
    for (const auto* t : live)
        stride = std::gcd(stride, t->exponent.eighths() - lo.eighths());
    std::vector<Integer> c(static_cast<std::size_t>((hi.eighths() - lo.eighths()) / stride + 1));
    for (const auto* t : live)
        c[static_cast<std::size_t>((t->exponent.eighths() - lo.eighths()) / stride)] += t->coefficient;
    return QSeries(lo, stride, std::move(c), order);
}

QSeries QSeries::from_dense(Exp8 valuation, std::int64_t stride, std::vector<Integer> coeffs, Exp8 order)
{
    if (!divides_eight(stride))
        throw std::invalid_argument("series grid stride must divide 8, got " + std::to_string(stride));
    return QSeries(valuation, stride, std::move(coeffs), order);
}

Integer QSeries::coefficient(Exp8 e) const
{
    if (e >= order_)
        throw std::out_of_range("coefficient of q^" + e.to_string() + " requested at or beyond order q^" +
                                order_.to_string());
    if (coeffs_.empty())
        return 0;
    const std::int64_t off = e.eighths() - valuation_.eighths();
    if (off < 0 || off % stride_ != 0)
        return 0;
    const auto idx = static_cast<std::size_t>(off / stride_);
    return idx < coeffs_.size() ? coeffs_[idx] : Integer(0);
}

const Integer& QSeries::leading_coefficient() const
{
    if (coeffs_.empty())
        throw std::domain_error("zero series has no leading coefficient");
    return coeffs_.front();
}

std::vector<Term> QSeries::terms() const
{
    std::vector<Term> out;
    for_each_term([&](Exp8 e, const Integer& c) { out.push_back({e, c}); });
    return out;
}

std::size_t QSeries::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

Exp8 QSeries::last_exponent() const
{
    if (coeffs_.empty())
        return order_;
    return Exp8{valuation_.eighths() + static_cast<std::int64_t>(coeffs_.size() - 1) * stride_};
}

QSeries QSeries::truncated(Exp8 new_order) const
{
    if (new_order > order_)
        throw std::domain_error("cannot extend a series from order q^" + order_.to_string() + " to q^" +
                                new_order.to_string());
    return QSeries(valuation_, stride_, coeffs_, new_order);
}

QSeries QSeries::shifted(Exp8 by) const
{
    return QSeries(valuation_ + by, stride_, coeffs_, order_ + by);
}

QSeries QSeries::reciprocal() const
{
    if (coeffs_.empty())
        throw std::domain_error("reciprocal of the zero series");
    const Integer& lead = coeffs_.front();
    if (lead != 1 && lead != -1)
        throw std::domain_error("reciprocal needs a unit leading coefficient, got " + lead.get_str());

    const Exp8 v = valuation_;
    const Exp8 rel_order = order_ - v;
    const std::int64_t len = points_below(Exp8{0}, stride_, rel_order);

    std::vector<std::pair<std::size_t, const Integer*>> sparse;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0)
            sparse.emplace_back(k, &coeffs_[k]);

    std::vector<Integer> b(static_cast<std::size_t>(len));
    if (len > 0)
        b[0] = lead;
    Integer acc;
    for (std::size_t n = 1; n < b.size(); ++n) {
        acc = 0;
        for (const auto& [k, ak] : sparse) {
            if (k > n)
                break;
            mpz_addmul(acc.get_mpz_t(), ak->get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = lead > 0 ? Integer(-acc) : acc;
    }
    return QSeries(-v, stride_, std::move(b), order_ - v - v);
}

bool QSeries::agrees_below(const QSeries& other, Exp8 bound) const
{
    const Exp8 lim = std::min({bound, order_, other.order_});
    auto lhs = truncated(lim).terms();
    auto rhs = other.truncated(lim).terms();
    if (lhs.size() != rhs.size())
        return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i].exponent != rhs[i].exponent || lhs[i].coefficient != rhs[i].coefficient)
            return false;
    return true;
}

QSeries QSeries::operator-() const
{
    QSeries out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

QSeries& QSeries::operator*=(const Integer& k)
{
    for (auto& c : coeffs_)
        c *= k;
    normalize();
    return *this;
}

namespace {

QSeries add_scaled(const QSeries& a, const QSeries& b, int sign)
{
    const Exp8 order = std::min(a.order(), b.order());
    if (b.is_zero())
        return a.truncated(order);
    if (a.is_zero())
        return sign > 0 ? b.truncated(order) : -b.truncated(order);

    const Exp8 base = std::min(a.valuation(), b.valuation());
    std::int64_t stride = std::gcd(a.stride(), b.stride());
    stride = std::gcd(stride, std::abs(a.valuation().eighths() - b.valuation().eighths()));
    const Exp8 top = std::max(a.last_exponent(), b.last_exponent());
    const std::int64_t len =
        std::min(points_below(base, stride, order), (top.eighths() - base.eighths()) / stride + 1);
    if (len <= 0)
        return QSeries::zero(order);

    std::vector<Integer> c(static_cast<std::size_t>(len));
    auto accumulate = [&](const QSeries& s, int sg) {
        s.for_each_term([&](Exp8 e, const Integer& x) {
            const std::int64_t idx = (e.eighths() - base.eighths()) / stride;
            if (idx < len) {
                if (sg > 0)
                    c[static_cast<std::size_t>(idx)] += x;
                else
                    c[static_cast<std::size_t>(idx)] -= x;
            }
        });
    };
    accumulate(a, 1);
    accumulate(b, sign);
    return QSeries::from_dense(base, stride, std::move(c), order);
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b)
{
    return add_scaled(a, b, 1);
}

QSeries operator-(const QSeries& a, const QSeries& b)
{
    return add_scaled(a, b, -1);
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    const Exp8 order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    if (a.is_zero() || b.is_zero())
        return QSeries::zero(order);

    const Exp8 base = a.valuation() + b.valuation();
    const std::int64_t stride = std::gcd(a.stride(), b.stride());
    const Exp8 top = a.last_exponent() + b.last_exponent();
    const std::int64_t len =
        std::min(points_below(base, stride, order), (top.eighths() - base.eighths()) / stride + 1);
    if (len <= 0)
        return QSeries::zero(order);

    // Outer loop over the sparser operand; inner loop skips zeros of the other.
    const QSeries& outer = a.term_count() <= b.term_count() ? a : b;
    const QSeries& inner = &outer == &a ? b : a;
    std::vector<std::pair<std::int64_t, const Integer*>> inner_terms;
    inner.for_each_term([&](Exp8 e, const Integer& x) {
        inner_terms.emplace_back((e.eighths() - inner.valuation().eighths()) / stride, &x);
    });

    std::vector<Integer> c(static_cast<std::size_t>(len));
    outer.for_each_term([&](Exp8 e, const Integer& x) {
        const std::int64_t off = (e.eighths() - outer.valuation().eighths()) / stride;
        for (const auto& [j, y] : inner_terms) {
            const std::int64_t idx = off + j;
            if (idx >= len)
                break;
            mpz_addmul(c[static_cast<std::size_t>(idx)].get_mpz_t(), x.get_mpz_t(), y->get_mpz_t());
        }
    });
    return QSeries::from_dense(base, stride, std::move(c), order);
}

bool operator==(const QSeries& a, const QSeries& b)
{
    return a.order_ == b.order_ && a.agrees_below(b, a.order_);
}

}  // namespace bo
