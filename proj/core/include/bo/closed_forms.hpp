#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bo/qseries.hpp"

namespace bo::forms {

// Rejected query: unsorted or repeated indices, negatives, or a collision
// (some r_j equal to some s_k; see the collision note in the README).
class MalformedQuery : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// pos = r_1 > ... > r_m >= 0, neg = s_{m+1} > ... > s_n >= 0.
struct CoeffQuery {
    std::vector<int> pos;
    std::vector<int> neg;

    int n() const { return static_cast<int>(pos.size() + neg.size()); }
    int m() const { return static_cast<int>(pos.size()); }
    bool has_collision() const;
    // Throws MalformedQuery. Collisions pass only with allow_collision.
    void validate(bool allow_collision = false) const;
    std::string to_string() const;
    friend bool operator==(const CoeffQuery&, const CoeffQuery&) = default;
};

// sum_{m_k >= 0} (-1)^M q^{(n+M)^2/2 + sum (m_k+1)(r_k+1/2)}, M = sum m_k.
QSeries f_multisum(const std::vector<int>& r, Exp8 order);

// sum_{a_j >= 0} (-1)^{sum a} q^{(A + m - B)^2/2 + sum_pos (a+1)(r+1/2) + sum_neg a(s+1/2)},
// A, B the sums of the pos and neg indices.
QSeries g_multisum(const CoeffQuery& q, Exp8 order);

// Constant term in zeta of the product of geometric factors with the theta kernel.
QSeries ct_formula(const CoeffQuery& q, Exp8 order);

// Printed two-index closed form for pure positive n = 2:
//   q^{r1+1/2}/(1-q^{r1-r2}) sum_{l>=1} (-1)^{l+1} q^{(l+1)^2/2 + l(r2+1/2)} (1 - q^{l(r1-r2)}).
// Valid in either index order; r1 == r2 throws.
QSeries example_n2_pos(int r1, int r2, Exp8 order);
// 1/(1-q^{r+s+1}) (sum_{l>=1} (-1)^{l+1} q^{l^2/2+l(r+1/2)} - q^{r+s+1} sum_{l>=0} (-1)^l q^{l^2/2+l(s+1/2)})
QSeries example_n2_mixed(int r, int s, Exp8 order);
// sum_{l>=0} (-1)^l q^{l^2/2 + l(s+1/2)}
QSeries example_n1_neg(int s, Exp8 order);

// 1/(1 - q^d) for a nonzero half-integer d (in halves), as a formal Laurent
// series: for d < 0 this is -q^{|d|}/(1 - q^{|d|}).
QSeries geometric_inverse(std::int64_t d_halves, Exp8 order);

}  // namespace bo::forms
