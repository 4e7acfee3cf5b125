#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "bo/asymptotics.hpp"
#include "bo/qseries.hpp"

namespace bo::num {

using Real = boost::multiprecision::mpfr_float;

// Sets the default working precision (decimal digits) for its lifetime.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational& x);
Real to_real(const Integer& x);

// Upper bound for sum_{e >= N} |c_e| x^e, given x = e^{-2 pi y} in (0, 1).
struct TailMajorant {
    std::function<Real(const Real& x, Exp8 N)> bound;

    // Every coefficient is in {-1, 0, 1} on the half grid: x^N / (1 - x^{1/2}).
    static TailMajorant unit_coefficients();
    // Terms of the multi-sums: one term per index tuple with exponent at least
    // the linear part, so the tail is at most
    //   x^{N/2} prod_pos x^{(r+1/2)/2}/(1 - x^{(r+1/2)/2}) prod_neg 1/(1 - x^{(s+1/2)/2}).
    static TailMajorant multisum(const std::vector<int>& pos, const std::vector<int>& neg);
    // (q;q)_inf times a 0/1-weighted state count: coefficients are dominated by
    // those of (sum_k q^{pent(k)}) / (q;q)_inf, giving with s = x^{1/2}
    //   x^{N/2} exp(pi^2 s / (6 (1 - s))) / (1 - s).
    static TailMajorant trace();
};

struct Evaluation {
    Real value;
    Real tail_bound;
};

// sum of c_e e^{-2 pi y e} over the known coefficients, plus the tail bound
// for everything at or beyond the series order. Throws std::domain_error when
// the bound exceeds `accuracy`.
Evaluation numeric_eval(const QSeries& s, const Real& y, const TailMajorant& tail, const Real& accuracy);

// Smallest integer order N whose tail bound at y is below `accuracy`.
Exp8 required_order(const TailMajorant& tail, const Real& y, const Real& accuracy);

// sum_{k <= K} c_k (pi y)^k.
Real eval_expansion(const asym::AsymExpansion& a, const Real& y, int K);

struct ThetaTransform {
    Real lhs;
    Real rhs;
    Real error;
    Real bound;
    bool within_bound() const { return error <= bound; }
};

// lhs = sum_l e^{2 pi i l z} e^{-pi l^2 y} (a real number), rhs = e^{-pi z^2/y}/sqrt(y),
// bound = 3 rhs e^{-pi (1-2|z|)^2 / (4y)}. Needs y <= 1/4 and |z| <= 0.45.
ThetaTransform theta_transform_check(const Real& z, const Real& y);

struct OrderRun {
    std::vector<Real> ys;
    std::vector<Real> errors;
    // log2(err(y_i)/err(y_{i+1})) for consecutive halvings.
    std::vector<Real> orders;
};

// Truncation error of the K-term expansion against the series value at each
// y (each y half the previous), with the series evaluated to `accuracy`.
OrderRun convergence_order(const std::function<QSeries(Exp8)>& series, const TailMajorant& tail,
                           const asym::AsymExpansion& a, int K, const std::vector<Real>& ys, const Real& accuracy);

}  // namespace bo::num
