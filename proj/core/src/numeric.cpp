#include "bo/numeric.hpp"

#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace bo::num {

namespace {

Real pi()
{
    return boost::math::constants::pi<Real>();
}

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision())
{
    if (digits < 10)
        throw std::domain_error("precision below 10 digits is not supported");
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard()
{
    Real::default_precision(saved_);
}

Real to_real(const Integer& x)
{
    return Real(x.get_str());
}

Real to_real(const Rational& x)
{
    return to_real(x.get_num()) / to_real(x.get_den());
}

TailMajorant TailMajorant::unit_coefficients()
{
    return {[](const Real& x, Exp8 N) -> Real {
        using boost::multiprecision::pow;
        using boost::multiprecision::sqrt;
        return pow(x, Real(N.to_double())) / (1 - sqrt(x));
    }};
}

TailMajorant TailMajorant::multisum(const std::vector<int>& pos, const std::vector<int>& neg)
{
    return {[pos, neg](const Real& x, Exp8 N) -> Real {
        using boost::multiprecision::pow;
        Real b = pow(x, Real(N.to_double() / 2));
        for (int r : pos) {
            const Real u = pow(x, Real((r + 0.5) / 2));
            b *= u / (1 - u);
        }
        for (int s : neg)
            b /= 1 - pow(x, Real((s + 0.5) / 2));
        return b;
    }};
}

TailMajorant TailMajorant::trace()
{
    return {[](const Real& x, Exp8 N) -> Real {
        using boost::multiprecision::exp;
        using boost::multiprecision::pow;
        using boost::multiprecision::sqrt;
        const Real s = sqrt(x);
        return pow(x, Real(N.to_double() / 2)) * exp(pi() * pi() * s / (6 * (1 - s))) / (1 - s);
    }};
}

Evaluation numeric_eval(const QSeries& s, const Real& y, const TailMajorant& tail, const Real& accuracy)
{
    if (y <= 0)
        throw std::domain_error("numeric_eval: y must be positive");
    using boost::multiprecision::exp;
    const Real x = exp(-2 * pi() * y);
    Evaluation out{Real(0), tail.bound(x, s.order())};
    if (out.tail_bound > accuracy)
        throw std::domain_error("numeric_eval: series known to q^" + s.order().to_string() +
                                " leaves a tail bound above the requested accuracy");
    s.for_each_term([&](Exp8 e, const Integer& c) { out.value += to_real(c) * exp(-2 * pi() * y * Real(e.to_double())); });
    return out;
}

Exp8 required_order(const TailMajorant& tail, const Real& y, const Real& accuracy)
{
    using boost::multiprecision::exp;
    const Real x = exp(-2 * pi() * y);
    std::int64_t n = 1;
    while (tail.bound(x, Exp8::integer(n)) > accuracy)
        n *= 2;
    std::int64_t lo = n / 2;
    while (lo + 1 < n) {
        const std::int64_t mid = (lo + n) / 2;
        if (tail.bound(x, Exp8::integer(mid)) > accuracy)
            lo = mid;
        else
            n = mid;
    }
    return Exp8::integer(n);
}

Real eval_expansion(const asym::AsymExpansion& a, const Real& y, int K)
{
    if (K > a.order())
        throw std::domain_error("expansion has fewer terms than requested");
    Real out = 0;
    const Real t = pi() * y;
    Real p = 1;
    for (int k = 0; k <= K; ++k) {
        out += to_real(a.c[static_cast<std::size_t>(k)]) * p;
        p *= t;
    }
    return out;
}

ThetaTransform theta_transform_check(const Real& z, const Real& y)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sqrt;
    if (y <= 0 || y > Real(1) / 4)
        throw std::domain_error("theta_transform_check: needs 0 < y <= 1/4");
    if (abs(z) > Real(0.45))
        throw std::domain_error("theta_transform_check: needs |z| <= 0.45");

    ThetaTransform t;
    // 1 + 2 sum_{l>=1} cos(2 pi l z) e^{-pi l^2 y}; stop once terms drop below the working precision.
    const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) - 5);
    t.lhs = 1;
    for (long l = 1;; ++l) {
        const Real w = exp(-pi() * Real(l * l) * y);
        t.lhs += 2 * cos(2 * pi() * Real(l) * z) * w;
        if (w < eps)
            break;
    }
    t.rhs = exp(-pi() * z * z / y) / sqrt(y);
    t.error = abs(t.lhs - t.rhs);
    const Real g = 1 - 2 * abs(z);
    t.bound = 3 * t.rhs * exp(-pi() * g * g / (4 * y));
    return t;
}

OrderRun convergence_order(const std::function<QSeries(Exp8)>& series, const TailMajorant& tail,
                           const asym::AsymExpansion& a, int K, const std::vector<Real>& ys, const Real& accuracy)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::log;
    OrderRun run;
    for (const Real& y : ys) {
        const Exp8 N = required_order(tail, y, accuracy);
        const Evaluation ev = numeric_eval(series(N), y, tail, accuracy);
        run.ys.push_back(y);
        run.errors.push_back(abs(ev.value - eval_expansion(a, y, K)));
    }
    for (std::size_t i = 0; i + 1 < run.errors.size(); ++i)
        run.orders.push_back(log(run.errors[i] / run.errors[i + 1]) / log(run.ys[i] / run.ys[i + 1]));
    return run;
}

}  // namespace bo::num
