#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bo/closed_forms.hpp"
#include "bo/qseries.hpp"
#include "bo/series_json.hpp"

namespace bo::ft {

// Raised when a step that must be exact is not (a denominator clearing
// leaves a remainder, a coefficient that must be integral is not).
class ConsistencyError : public std::runtime_error {
public:
    ConsistencyError(const std::string& what, std::string offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}
    const std::string& offending() const { return offending_; }

private:
    std::string offending_;
};

// Finite Laurent polynomial in q^{1/2}: exponent (in halves) -> rational.
class LaurentPoly {
public:
    using Map = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;
    static LaurentPoly monomial(std::int64_t halves, const Rational& c);
    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }
    // 1 - q^{d/2}
    static LaurentPoly one_minus(std::int64_t d_halves);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational at(std::int64_t halves) const;
    // Lowest / highest exponent in halves; throw on the zero polynomial.
    std::int64_t low() const;
    std::int64_t high() const;

    void add(std::int64_t halves, const Rational& c);
    LaurentPoly shifted(std::int64_t halves) const;

    // Exact division; throws ConsistencyError on a nonzero remainder.
    LaurentPoly divided_by(const LaurentPoly& d) const;

    QSeries to_series(Exp8 order) const;
    std::string to_string() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    Map terms_;
};

// P(q) Psi(q) + Q(q), Psi(q) = sum_{l>=0} (-1)^l q^{l(l+1)/2}.
struct FalseThetaPair {
    LaurentPoly P;
    LaurentPoly Q;

    QSeries expand(Exp8 order) const;
    friend bool operator==(const FalseThetaPair&, const FalseThetaPair&) = default;
};

// sign * sum_{l>=0} (-1)^l q^{l^2/2 + b l + c}; b, c in halves.
struct ShiftedFalseTheta {
    int sign;
    std::int64_t b_halves;
    std::int64_t c_halves;

    // Needs b - 1/2 integral.
    FalseThetaPair to_pair() const;
    QSeries expand(Exp8 order) const;
};

// (P Psi + Q) / prod (1 - q^{d/2}) over the multiset `den` (d > 0, halves).
struct RationalPair {
    FalseThetaPair num;
    std::map<std::int64_t, int> den;

    static RationalPair from(const FalseThetaPair& p) { return {p, {}}; }
    RationalPair times(const LaurentPoly& m) const;
    // Divides by 1 - q^{d/2}; negative d is rewritten as -q^{|d|/2}/(1 - q^{|d|/2}).
    RationalPair over_one_minus(std::int64_t d_halves) const;
    LaurentPoly den_poly() const;

    friend RationalPair operator+(const RationalPair& a, const RationalPair& b);
    friend RationalPair operator-(const RationalPair& a, const RationalPair& b);
};

QSeries psi(Exp8 order);

// sum_{l>=M} (-1)^l q^{l(l+1)/2} = Psi - sum_{l<M} (...), as (1, -partial).
FalseThetaPair tail_to_pair(std::int64_t M);

enum class PivotRule {
    proof_order,  // two largest indices, positive side first
    reversed,     // two smallest indices, negative side first
};

// Clearing polynomial prod(1 - q^{r_j+s_k+1}) prod(1 - q^{r_j-r_k}) prod(1 - q^{s_j-s_k}).
LaurentPoly clearing_factor(const forms::CoeffQuery& q);
// clearing_factor * g_multisum below the order.
QSeries cleared_target(const forms::CoeffQuery& q, Exp8 order);

struct Decomposition {
    FalseThetaPair pair;
    // Support bounds (halves) for P and Q propagated alongside the recursion.
    std::int64_t p_low, p_high, q_low, q_high;
    std::size_t leaves = 0;
    bool within_bounds() const;
};

// The pair with clearing_factor * series = P Psi + Q.
Decomposition decompose(const forms::CoeffQuery& q, PivotRule rule = PivotRule::proof_order);
FalseThetaPair decompose_F(const std::vector<int>& r, PivotRule rule = PivotRule::proof_order);
FalseThetaPair decompose_neg(const std::vector<int>& s, PivotRule rule = PivotRule::proof_order);
FalseThetaPair decompose_G(const forms::CoeffQuery& q, PivotRule rule = PivotRule::proof_order);

// The n = 1 closed form: P = (-1)^{r+1} q^{-r(r+1)/2}, Q = -P sum_{l<=r} (-1)^l q^{l(l+1)/2}.
FalseThetaPair n1_closed_form(int r);

// P psi + Q == target below the order (lowered to the target's order).
bool verify_pair(const FalseThetaPair& pair, const QSeries& target, Exp8 order);

Json to_json(const LaurentPoly& p);
Json to_json(const FalseThetaPair& p);
FalseThetaPair pair_from_json(const Json& j);

}  // namespace bo::ft
