#include "bo/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bo/number_series.hpp"
#include "bo/zeta_laurent.hpp"

namespace bo::forms {

namespace {

// Half-grid points e with e/2 < order.
std::int64_t halves_below(Exp8 order)
{
    return order.eighths() <= 0 ? 0 : (order.eighths() + 3) / 4;
}

QSeries from_bins(const std::vector<std::int64_t>& bins, Exp8 order)
{
    std::vector<Integer> c;
    c.reserve(bins.size());
    for (auto x : bins)
        c.emplace_back(static_cast<long>(x));
    return QSeries::from_dense(Exp8{0}, 4, std::move(c), order);
}

void check_decreasing(const std::vector<int>& v, const char* name)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            throw MalformedQuery(std::string(name) + " indices must be non-negative");
        if (i && v[i] >= v[i - 1])
            throw MalformedQuery(std::string(name) + " indices must be strictly decreasing");
    }
}

// min over integer B >= 0 of (c - B)^2 + B w.
std::int64_t neg_floor(std::int64_t c, std::int64_t w)
{
    if (c <= 0)
        return c * c;
    const std::int64_t b0 = std::max<std::int64_t>(0, c - (w + 1) / 2);
    std::int64_t best = c * c;
    for (std::int64_t b = b0; b <= b0 + 1; ++b)
        best = std::min(best, (c - b) * (c - b) + b * w);
    return best;
}

struct GEngine {
    std::vector<std::int64_t> wpos, wneg;  // 2r+1, 2s+1
    std::vector<std::int64_t> pos_tail;     // sum of wpos[j..]
    std::vector<std::int64_t> neg_min;      // min of wneg[k..]
    std::int64_t limit;
    std::vector<std::int64_t> bins;

    std::int64_t rest_floor(std::int64_t c, std::size_t k) const
    {
        return k < wneg.size() ? neg_floor(c, neg_min[k]) : c * c;
    }

    void run_pos(std::size_t j, std::int64_t c, std::int64_t lin, int sign)
    {
        if (j == wpos.size()) {
            run_neg(0, c, lin, sign);
            return;
        }
        for (std::int64_t a = 0;; ++a) {
            const std::int64_t l = lin + (a + 1) * wpos[j];
            if (rest_floor(c + a, 0) + l + pos_tail[j + 1] >= limit)
                break;
            run_pos(j + 1, c + a, l, a % 2 ? -sign : sign);
        }
    }

    void run_neg(std::size_t k, std::int64_t c, std::int64_t lin, int sign)
    {
        if (k == wneg.size()) {
            const std::int64_t e = c * c + lin;
            if (e < limit)
                bins[static_cast<std::size_t>(e)] += sign;
            return;
        }
        const std::int64_t w = wneg[k];
        if (k + 1 == wneg.size()) {
            // (c-b)^2 + b w is convex in b; walk out from its minimum.
            const std::int64_t b0 = std::max<std::int64_t>(0, c - w / 2);
            auto emit = [&](std::int64_t b) {
                const std::int64_t e = (c - b) * (c - b) + b * w + lin;
                if (e >= limit)
                    return false;
                bins[static_cast<std::size_t>(e)] += b % 2 ? -sign : sign;
                return true;
            };
            for (std::int64_t b = b0; emit(b); ++b) {
            }
            for (std::int64_t b = b0 - 1; b >= 0 && emit(b); --b) {
            }
            return;
        }
        for (std::int64_t b = 0;; ++b) {
            const std::int64_t l = lin + b * w;
            if (rest_floor(c - b, k + 1) + l >= limit) {
                if (b >= c)
                    break;  // beyond this point the bound only grows
                continue;
            }
            run_neg(k + 1, c - b, l, b % 2 ? -sign : sign);
        }
    }
};

}  // namespace

bool CoeffQuery::has_collision() const
{
    for (int r : pos)
        if (std::find(neg.begin(), neg.end(), r) != neg.end())
            return true;
    return false;
}

void CoeffQuery::validate(bool allow_collision) const
{
    check_decreasing(pos, "pos");
    check_decreasing(neg, "neg");
    if (!allow_collision && has_collision())
        throw MalformedQuery("query " + to_string() +
                             " requests t^{r+1/2} and t^{-r-1/2} for the same r; the well-formedness "
                             "predicate is r_j != s_k (see README, 'Collisions')");
}

std::string CoeffQuery::to_string() const
{
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << ')';
    };
    os << "pos=";
    list(pos);
    os << " neg=";
    list(neg);
    return os.str();
}

QSeries f_multisum(const std::vector<int>& r, Exp8 order)
{
    check_decreasing(r, "pos");
    const std::int64_t limit = halves_below(order);
    std::vector<std::int64_t> bins(static_cast<std::size_t>(limit));
    const auto n = static_cast<std::int64_t>(r.size());
    std::vector<std::int64_t> tail(r.size() + 1, 0);
    for (std::size_t j = r.size(); j-- > 0;)
        tail[j] = tail[j + 1] + 2 * r[j] + 1;

    // 2E = (n + M)^2 + sum (m_k + 1)(2 r_k + 1)
    auto rec = [&](auto& self, std::size_t j, std::int64_t M, std::int64_t lin) -> void {
        if (j == r.size()) {
            const std::int64_t e = (n + M) * (n + M) + lin;
            if (e < limit)
                bins[static_cast<std::size_t>(e)] += M % 2 ? -1 : 1;
            return;
        }
        for (std::int64_t m = 0;; ++m) {
            const std::int64_t l = lin + m * (2 * r[j] + 1);
            if ((n + M + m) * (n + M + m) + l >= limit)
                break;
            self(self, j + 1, M + m, l);
        }
    };
    rec(rec, 0, 0, tail[0]);
    return from_bins(bins, order);
}

QSeries g_multisum(const CoeffQuery& q, Exp8 order)
{
    q.validate();
    GEngine g;
    for (int r : q.pos)
        g.wpos.push_back(2 * r + 1);
    for (int s : q.neg)
        g.wneg.push_back(2 * s + 1);
    g.pos_tail.assign(g.wpos.size() + 1, 0);
    for (std::size_t j = g.wpos.size(); j-- > 0;)
        g.pos_tail[j] = g.pos_tail[j + 1] + g.wpos[j];
    g.neg_min.assign(g.wneg.size(), 0);
    for (std::size_t k = g.wneg.size(); k-- > 0;)
        g.neg_min[k] = k + 1 < g.wneg.size() ? std::min(g.wneg[k], g.neg_min[k + 1]) : g.wneg[k];
    g.limit = halves_below(order);
    g.bins.assign(static_cast<std::size_t>(g.limit), 0);
    g.run_pos(0, q.m(), 0, 1);
    return from_bins(g.bins, order);
}

QSeries ct_formula(const CoeffQuery& q, Exp8 order)
{
    q.validate();
    return ct_zeta(ct_integrand(q.pos, q.neg, order));
}

QSeries geometric_inverse(std::int64_t d_halves, Exp8 order)
{
    if (d_halves == 0)
        throw std::domain_error("1/(1-q^0) is undefined");
    const std::int64_t d = std::abs(d_halves);
    std::vector<Term> terms;
    for (std::int64_t k = 0; Exp8::halves(k * d) < order; ++k)
        terms.push_back({Exp8::halves(k * d), Integer(1)});
    QSeries g = QSeries::from_terms(terms, order);
    if (d_halves > 0)
        return g;
    return -g.shifted(Exp8::halves(d));
}

QSeries example_n2_pos(int r1, int r2, Exp8 order)
{
    if (r1 < 0 || r2 < 0)
        throw std::domain_error("example_n2_pos: negative index");
    if (r1 == r2)
        throw std::domain_error("example_n2_pos: r1 == r2 divides by 1 - q^0");
    const std::int64_t d = 2 * (r1 - r2);  // halves
    const Exp8 pre = Exp8::halves(2 * r1 + 1);
    // Work order for the inner sum: the prefactor shifts by pre (and by |d| when d < 0).
    const Exp8 inner_order = order - pre + Exp8::halves(d < 0 ? -d : 0);
    std::vector<Term> terms;
    for (std::int64_t l = 1;; ++l) {
        const std::int64_t base = (l + 1) * (l + 1) + l * (2 * r2 + 1);  // halves
        const std::int64_t other = base + l * d;
        if (Exp8::halves(std::min(base, other)) >= inner_order)
            break;
        const Integer sign = l % 2 ? 1 : -1;  // (-1)^{l+1}
        terms.push_back({Exp8::halves(base), sign});
        terms.push_back({Exp8::halves(other), -sign});
    }
    const QSeries inner = QSeries::from_terms(terms, inner_order);
    const QSeries geo = geometric_inverse(d, order + Exp8::halves(std::abs(d)));
    return (geo * inner).shifted(pre).truncated(order);
}

QSeries example_n2_mixed(int r, int s, Exp8 order)
{
    if (r < 0 || s < 0)
        throw std::domain_error("example_n2_mixed: negative index");
    const std::int64_t rs = 2 * (r + s + 1);  // halves
    std::vector<Term> terms;
    for (std::int64_t l = 1; Exp8::halves(l * l + l * (2 * r + 1)) < order; ++l)
        terms.push_back({Exp8::halves(l * l + l * (2 * r + 1)), Integer(l % 2 ? 1 : -1)});
    for (std::int64_t l = 0; Exp8::halves(rs + l * l + l * (2 * s + 1)) < order; ++l)
        terms.push_back({Exp8::halves(rs + l * l + l * (2 * s + 1)), Integer(l % 2 ? 1 : -1)});
    const QSeries num = QSeries::from_terms(terms, order);
    return (geometric_inverse(rs, order) * num).truncated(order);
}

QSeries example_n1_neg(int s, Exp8 order)
{
    if (s < 0)
        throw std::domain_error("example_n1_neg: negative index");
    std::vector<Term> terms;
    for (std::int64_t l = 0; Exp8::halves(l * l + l * (2 * s + 1)) < order; ++l)
        terms.push_back({Exp8::halves(l * l + l * (2 * s + 1)), Integer(l % 2 ? -1 : 1)});
    return QSeries::from_terms(terms, order);
}

}  // namespace bo::forms
