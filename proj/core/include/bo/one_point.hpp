#pragma once

#include <cstdint>
#include <optional>

#include "bo/number_series.hpp"
#include "bo/qseries.hpp"
#include "bo/zeta_laurent.hpp"

namespace bo {

// q^{1/8} sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, i.e. eta^3.
QSeries eta_cubed(Exp8 order);

// sum_{j in [-J, J]} f_j t^{j+1/2}, where f_j is the pure positive
// coefficient series for r = j (j >= 0) and the pure negative one for
// s = -j-1 (j < 0).
ZetaLaurent bilateral_one_point(int J, Exp8 order);

// What the product with Theta(t) is compared against at t^0.
enum class OnePointTarget { literal_one, eta_cubed };

struct OnePointReport {
    IdentityReport cells;
    // Cells inside [-J/2, J/2] x [0, N) that truncating the sum at |j| <= J
    // could corrupt; these are not compared.
    std::size_t uncertified = 0;
};

struct OnePointOptions {
    OnePointTarget target = OnePointTarget::literal_one;
    // Added to f_0 before forming the product (falsification runs).
    std::optional<QSeries> f0_perturbation;
};

// Compares (bilateral_one_point(J) * Theta)(t) with the target on every
// certified cell with integer t-exponent in [-J/2, J/2] and q-exponent < N.
OnePointReport one_point_n1_check(int J, Exp8 order, const OnePointOptions& opt = {});

// Theta(t)^{-l} on the annulus |t| > 1, restricted to t-exponents in
// [-W, W] (keys in halves). Every stored cell is exact; q-order is `order`.
ZetaLaurent inverse_theta_power(int l, int W, Exp8 order);

struct InverseThetaReport {
    IdentityReport cells;
    std::size_t uncertified = 0;
};

// Multiplies inverse_theta_power(l, W, N) by Theta^l and compares with 1 on
// the cells whose value only involves window entries. Throws
// std::domain_error when the window cannot certify even the t^0 row at q^0.
InverseThetaReport inverse_theta_check(int l, int W, Exp8 order);

}  // namespace bo
