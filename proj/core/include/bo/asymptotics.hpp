#pragma once

#include <vector>

#include "bo/closed_forms.hpp"
#include "bo/qseries.hpp"

namespace bo::asym {

// E_v(1) and E_v(0) for v = 0..V.
struct EulerTable {
    std::vector<Rational> at_one;
    std::vector<Rational> at_zero;
    int size() const { return static_cast<int>(at_one.size()); }
};

// From the generating function 2 e^{xt} / (e^t + 1); the table is checked
// against E_v(1) = (-1)^v E_v(0) and E_v(1) + E_v(0) = 2[v = 0] before returning.
EulerTable euler_values(int V);

// E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x), evaluated at a rational point.
std::vector<Rational> euler_by_recurrence(int V, const Rational& x);

// Gamma((l+1)/2) / Gamma(1/2) for even l.
Rational gamma_half_ratio(int l);

// sum_k c_k (pi y)^k.
struct AsymExpansion {
    std::vector<Rational> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
};

// c_0..c_K for the small-y expansion at q = e^{-2 pi y}.
AsymExpansion asym_F(const std::vector<int>& r, int K);
AsymExpansion asym_G(const forms::CoeffQuery& q, int K);

// The first-order coefficients in closed form:
//   2^n c_1 = -(sum r + n(n+1)/4)            (pure positive)
//   2^n c_1 = -(sum r - sum s + m + n(n-3)/4) (mixed)
Rational first_order_c1_F(const std::vector<int>& r);
Rational first_order_c1_G(const forms::CoeffQuery& q);

}  // namespace bo::asym
