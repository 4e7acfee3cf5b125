#include "bo/false_theta.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bo::ft {

namespace {

std::int64_t tri(std::int64_t x)
{
    return x * (x + 1) / 2;
}

// Exponents are kept in halves, so q^{T(x)} sits at 2*T(x).
constexpr std::int64_t kEmptyLow = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::int64_t kEmptyHigh = std::numeric_limits<std::int64_t>::min() / 4;

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t halves, const Rational& c)
{
    LaurentPoly p;
    p.add(halves, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus(std::int64_t d_halves)
{
    LaurentPoly p = constant(1);
    p.add(d_halves, -1);
    return p;
}

Rational LaurentPoly::at(std::int64_t halves) const
{
    auto it = terms_.find(halves);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::low() const
{
    if (terms_.empty())
        throw std::domain_error("zero polynomial has no lowest term");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::high() const
{
    if (terms_.empty())
        throw std::domain_error("zero polynomial has no highest term");
    return terms_.rbegin()->first;
}

void LaurentPoly::add(std::int64_t halves, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(halves, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(std::int64_t halves) const
{
    LaurentPoly p;
    for (const auto& [e, c] : terms_)
        p.terms_.emplace(e + halves, c);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quo;
    const std::int64_t dlow = d.low();
    const std::int64_t dhigh = d.high();
    const Rational lead = d.terms_.rbegin()->second;
    // Long division from the top; quotient exponents lie in [low - dlow, high - dhigh].
    const std::int64_t qmin = is_zero() ? 0 : low() - dlow;
    while (!rem.is_zero() && rem.high() - dhigh >= qmin) {
        const std::int64_t shift = rem.high() - dhigh;
        const Rational c = rem.terms_.rbegin()->second / lead;
        quo.add(shift, c);
        for (const auto& [e, x] : d.terms_)
            rem.add(e + shift, -c * x);
    }
    if (!rem.is_zero())
        throw ConsistencyError("inexact division by " + d.to_string(), "remainder " + rem.to_string());
    return quo;
}

QSeries LaurentPoly::to_series(Exp8 order) const
{
    std::vector<Term> terms;
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1)
            throw ConsistencyError("non-integral coefficient in a q-series", to_string());
        terms.push_back({Exp8::halves(e), c.get_num()});
    }
    return QSeries::from_terms(terms, order);
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = sgn(c) < 0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        const Rational a = abs(c);
        const std::string x = Exp8::halves(e).to_string();
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1)
                os << a.get_str() << '*';
            os << 'q';
            if (e != 2)
                os << '^' << (e % 2 == 0 && e > 0 ? x : "(" + x + ")");
        }
        first = false;
    }
    return os.str();
}

QSeries psi(Exp8 order)
{
    std::vector<Term> terms;
    for (std::int64_t l = 0; Exp8::integer(tri(l)) < order; ++l)
        terms.push_back({Exp8::integer(tri(l)), Integer(l % 2 ? -1 : 1)});
    return QSeries::from_terms(terms, order);
}

QSeries FalseThetaPair::expand(Exp8 order) const
{
    QSeries out = Q.to_series(order);
    if (P.is_zero())
        return out;
    // P may carry negative powers; extend psi so that the product reaches the order.
    const Exp8 extra = Exp8::halves(std::max<std::int64_t>(0, -P.low()));
    return (P.to_series(order + extra) * psi(order + extra)).truncated(order) + out;
}

FalseThetaPair tail_to_pair(std::int64_t M)
{
    if (M < 0)
        throw std::domain_error("tail_to_pair: start must be non-negative, got " + std::to_string(M));
    FalseThetaPair p{LaurentPoly::constant(1), {}};
    for (std::int64_t l = 0; l < M; ++l)
        p.Q.add(2 * tri(l), l % 2 ? 1 : -1);
    return p;
}

FalseThetaPair ShiftedFalseTheta::to_pair() const
{
    if ((b_halves - 1) % 2 != 0)
        throw std::domain_error("shifted false theta: b - 1/2 must be an integer");
    // l^2/2 + b l = T(l + beta) - T(beta) with beta = b - 1/2, so the series is
    // sign (-1)^beta q^{c - T(beta)} sum_{L >= beta} (-1)^L q^{T(L)}.
    const std::int64_t beta = (b_halves - 1) / 2;
    const std::int64_t shift = c_halves - 2 * tri(beta);
    const int s = sign * (beta % 2 ? -1 : 1);
    FalseThetaPair tail;
    if (beta >= 0) {
        tail = tail_to_pair(beta);
    } else {
        tail.P = LaurentPoly::constant(1);
        for (std::int64_t L = beta; L < 0; ++L)
            tail.Q.add(2 * tri(L), L % 2 ? -1 : 1);
    }
    const LaurentPoly m = LaurentPoly::monomial(shift, s);
    return {tail.P * m, tail.Q * m};
}

QSeries ShiftedFalseTheta::expand(Exp8 order) const
{
    // In halves the exponent is l^2 + b l + c, increasing once 2l + 1 + b > 0.
    std::vector<Term> terms;
    for (std::int64_t l = 0;; ++l) {
        const std::int64_t h = l * l + b_halves * l + c_halves;
        const bool rising = 2 * l + 1 + b_halves > 0;
        if (rising && Exp8::halves(h) >= order)
            break;
        if (Exp8::halves(h) < order)
            terms.push_back({Exp8::halves(h), Integer(sign * (l % 2 ? -1 : 1))});
    }
    return QSeries::from_terms(terms, order);
}

RationalPair RationalPair::times(const LaurentPoly& m) const
{
    return {{num.P * m, num.Q * m}, den};
}

RationalPair RationalPair::over_one_minus(std::int64_t d_halves) const
{
    if (d_halves == 0)
        throw std::domain_error("division by 1 - q^0");
    if (d_halves > 0) {
        RationalPair out = *this;
        ++out.den[d_halves];
        return out;
    }
    RationalPair out = times(LaurentPoly::monomial(-d_halves, -1));
    ++out.den[-d_halves];
    return out;
}

LaurentPoly RationalPair::den_poly() const
{
    LaurentPoly p = LaurentPoly::constant(1);
    for (const auto& [d, k] : den)
        for (int i = 0; i < k; ++i)
            p = p * LaurentPoly::one_minus(d);
    return p;
}

namespace {

// Brings a and b over the symbolwise lcm of their denominators.
std::pair<RationalPair, RationalPair> common(const RationalPair& a, const RationalPair& b)
{
    std::map<std::int64_t, int> lcm = a.den;
    for (const auto& [d, k] : b.den)
        lcm[d] = std::max(lcm[d], k);
    auto lift = [&](const RationalPair& x) {
        LaurentPoly f = LaurentPoly::constant(1);
        for (const auto& [d, k] : lcm) {
            auto it = x.den.find(d);
            const int have = it == x.den.end() ? 0 : it->second;
            for (int i = have; i < k; ++i)
                f = f * LaurentPoly::one_minus(d);
        }
        RationalPair out = x.times(f);
        out.den = lcm;
        return out;
    };
    return {lift(a), lift(b)};
}

}  // namespace

RationalPair operator+(const RationalPair& a, const RationalPair& b)
{
    auto [x, y] = common(a, b);
    return {{x.num.P + y.num.P, x.num.Q + y.num.Q}, x.den};
}

RationalPair operator-(const RationalPair& a, const RationalPair& b)
{
    auto [x, y] = common(a, b);
    return {{x.num.P - y.num.P, x.num.Q - y.num.Q}, x.den};
}

LaurentPoly clearing_factor(const forms::CoeffQuery& q)
{
    LaurentPoly f = LaurentPoly::constant(1);
    for (int r : q.pos)
        for (int s : q.neg)
            f = f * LaurentPoly::one_minus(2 * (r + s + 1));
    for (std::size_t j = 0; j < q.pos.size(); ++j)
        for (std::size_t k = j + 1; k < q.pos.size(); ++k)
            f = f * LaurentPoly::one_minus(2 * (q.pos[j] - q.pos[k]));
    for (std::size_t j = 0; j < q.neg.size(); ++j)
        for (std::size_t k = j + 1; k < q.neg.size(); ++k)
            f = f * LaurentPoly::one_minus(2 * (q.neg[j] - q.neg[k]));
    return f;
}

QSeries cleared_target(const forms::CoeffQuery& q, Exp8 order)
{
    return clearing_factor(q).to_series(order) * forms::g_multisum(q, order);
}

namespace {

// Interval bookkeeping that mirrors the recursion without coefficients.
struct Span {
    std::int64_t lo = kEmptyLow;
    std::int64_t hi = kEmptyHigh;
    bool empty() const { return lo > hi; }
    Span shifted(std::int64_t s) const { return empty() ? *this : Span{lo + s, hi + s}; }
    Span widened(std::int64_t up) const { return empty() ? *this : Span{lo, hi + up}; }
    static Span join(Span a, Span b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }
};

struct Bounded {
    RationalPair value;
    Span p, q;
    std::size_t leaves = 0;
};

std::int64_t den_degree(const std::map<std::int64_t, int>& den)
{
    std::int64_t deg = 0;
    for (const auto& [d, k] : den)
        deg += d * k;
    return deg;
}

Span support(const LaurentPoly& x)
{
    return x.is_zero() ? Span{} : Span{x.low(), x.high()};
}

Bounded leaf(const ShiftedFalseTheta& f)
{
    const std::int64_t beta = (f.b_halves - 1) / 2;
    const std::int64_t shift = f.c_halves - 2 * tri(beta);
    // P is the monomial q^{shift}; Q runs over shift + 2T(L), L between 0 and beta.
    Span q;
    if (beta > 0)
        q = {shift, shift + 2 * tri(beta - 1)};
    else if (beta < 0)
        q = {shift, shift + 2 * tri(beta)};
    return {RationalPair::from(f.to_pair()), {shift, shift}, q, 1};
}

Bounded scale(const Bounded& x, std::int64_t mono_halves, const Rational& c)
{
    return {x.value.times(LaurentPoly::monomial(mono_halves, c)), x.p.shifted(mono_halves),
            x.q.shifted(mono_halves), x.leaves};
}

Bounded over(const Bounded& x, std::int64_t d_halves)
{
    Bounded out = x;
    out.value = x.value.over_one_minus(d_halves);
    if (d_halves < 0) {
        out.p = out.p.shifted(-d_halves);
        out.q = out.q.shifted(-d_halves);
    }
    return out;
}

Bounded combine(const Bounded& a, const Bounded& b, int sign)
{
    const RationalPair v = sign > 0 ? a.value + b.value : a.value - b.value;
    const std::int64_t deg = den_degree(v.den);
    const std::int64_t ua = deg - den_degree(a.value.den);
    const std::int64_t ub = deg - den_degree(b.value.den);
    return {v, Span::join(a.p.widened(ua), b.p.widened(ub)), Span::join(a.q.widened(ua), b.q.widened(ub)),
            a.leaves + b.leaves};
}

std::vector<int> without(const std::vector<int>& v, int x)
{
    std::vector<int> out;
    for (int y : v)
        if (y != x)
            out.push_back(y);
    return out;
}

// sum_{a_j >= 0} (-1)^{sum a} q^{(A - B + a)^2/2 + sum_pos (a+1)(r+1/2) + sum_neg a(s+1/2)}
Bounded multisum_pair(std::int64_t a, const std::vector<int>& pos, const std::vector<int>& neg, PivotRule rule)
{
    auto pick = [&](const std::vector<int>& v) {
        std::vector<int> s = v;
        std::sort(s.begin(), s.end());
        return rule == PivotRule::proof_order ? std::pair{s[s.size() - 1], s[s.size() - 2]} : std::pair{s[0], s[1]};
    };
    const bool pos_first = rule == PivotRule::proof_order;
    const bool split_pos = pos.size() >= 2 && (pos_first || neg.size() < 2);
    const bool split_neg = !split_pos && neg.size() >= 2;

    if (split_pos) {
        // Summing out the first partial sum: q^{x+1/2}/(1-q^{x-y}) (H(pos\x) - H(pos\y)).
        const auto [x, y] = pick(pos);
        Bounded diff = combine(multisum_pair(a, without(pos, x), neg, rule),
                               multisum_pair(a, without(pos, y), neg, rule), -1);
        return over(scale(diff, 2 * x + 1, 1), 2 * (x - y));
    }
    if (split_neg) {
        // 1/(1-q^{x-y}) (H(neg\x) - q^{x-y} H(neg\y)).
        const auto [x, y] = pick(neg);
        Bounded diff = combine(multisum_pair(a, pos, without(neg, x), rule),
                               scale(multisum_pair(a, pos, without(neg, y), rule), 2 * (x - y), 1), -1);
        return over(diff, 2 * (x - y));
    }
    if (pos.size() == 1 && neg.size() == 1) {
        // H(a; r, s) = [sum_l (-1)^l q^{l^2/2 + l(a+r+1/2) + a^2/2 + r + 1/2}
        //               - sum_l (-1)^l q^{l^2/2 + l(s-a+3/2) + (1-a)^2/2 + r + s + 1}] / (1 - q^{r+s+1})
        const std::int64_t r = pos[0];
        const std::int64_t s = neg[0];
        const Bounded first = leaf({1, 2 * (a + r) + 1, a * a + 2 * r + 1});
        const Bounded second = leaf({-1, 2 * (s - a) + 3, (1 - a) * (1 - a) + 2 * (r + s + 1)});
        return over(combine(first, second, 1), 2 * (r + s + 1));
    }
    if (pos.size() == 1)
        return leaf({1, 2 * (a + pos[0]) + 1, a * a + 2 * pos[0] + 1});
    if (neg.size() == 1)
        return leaf({1, 2 * (neg[0] - a) + 1, a * a});
    // No indices at all: the single term q^{a^2/2}.
    return {RationalPair::from({{}, LaurentPoly::monomial(a * a, 1)}), {}, {a * a, a * a}, 1};
}

}  // namespace

bool Decomposition::within_bounds() const
{
    auto inside = [](const LaurentPoly& x, std::int64_t lo, std::int64_t hi) {
        return x.is_zero() || (x.low() >= lo && x.high() <= hi);
    };
    return inside(pair.P, p_low, p_high) && inside(pair.Q, q_low, q_high);
}

Decomposition decompose(const forms::CoeffQuery& q, PivotRule rule)
{
    q.validate();
    // The shift inside the square is m for every query (n when pure positive, 0 when pure negative).
    const Bounded b = multisum_pair(q.m(), q.pos, q.neg, rule);
    const LaurentPoly D = clearing_factor(q);
    const LaurentPoly den = b.value.den_poly();
    auto clear = [&](const LaurentPoly& x, const char* which) {
        try {
            return (x * D).divided_by(den);
        } catch (const ConsistencyError& e) {
            throw ConsistencyError(std::string("clearing of ") + which + " for " + q.to_string() + " is inexact",
                                   e.offending());
        }
    };
    Decomposition out;
    out.pair = {clear(b.value.num.P, "P"), clear(b.value.num.Q, "Q")};
    const std::int64_t grow = (D.is_zero() ? 0 : D.high()) - den_degree(b.value.den);
    out.p_low = b.p.lo;
    out.p_high = b.p.hi + grow;
    out.q_low = b.q.lo;
    out.q_high = b.q.hi + grow;
    out.leaves = b.leaves;
    return out;
}

FalseThetaPair decompose_F(const std::vector<int>& r, PivotRule rule)
{
    return decompose({r, {}}, rule).pair;
}

FalseThetaPair decompose_neg(const std::vector<int>& s, PivotRule rule)
{
    return decompose({{}, s}, rule).pair;
}

FalseThetaPair decompose_G(const forms::CoeffQuery& q, PivotRule rule)
{
    return decompose(q, rule).pair;
}

FalseThetaPair n1_closed_form(int r)
{
    const Rational sign = r % 2 ? 1 : -1;  // (-1)^{r+1}
    const std::int64_t shift = -2 * tri(r);
    FalseThetaPair out{LaurentPoly::monomial(shift, sign), {}};
    for (std::int64_t l = 0; l <= r; ++l)
        out.Q.add(shift + 2 * tri(l), -sign * (l % 2 ? -1 : 1));
    return out;
}

bool verify_pair(const FalseThetaPair& pair, const QSeries& target, Exp8 order)
{
    const Exp8 upto = std::min(order, target.order());
    return pair.expand(upto).agrees_below(target, upto);
}

Json to_json(const LaurentPoly& p)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
    return out;
}

Json to_json(const FalseThetaPair& p)
{
    return Json{{"P", to_json(p.P)}, {"Q", to_json(p.Q)}};
}

FalseThetaPair pair_from_json(const Json& j)
{
    auto poly = [](const Json& a) {
        LaurentPoly out;
        for (const auto& t : a) {
            Rational c(Integer(t.at(1).get<std::string>()), Integer(t.at(2).get<std::string>()));
            c.canonicalize();
            out.add(t.at(0).get<std::int64_t>(), c);
        }
        return out;
    };
    return {poly(j.at("P")), poly(j.at("Q"))};
}

}  // namespace bo::ft
