#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bo/qseries.hpp"
#include "bo/zeta_laurent.hpp"

namespace bo {

// (q;q)_inf below q^N, built sparsely from the pentagonal number theorem.
QSeries euler_pochhammer(Exp8 order);

// p(0..n) from the pentagonal recurrence.
std::vector<Integer> partition_numbers(std::int64_t n);

// 1/(q;q)_inf below q^N.
QSeries partition_series(Exp8 order);

// Theta(t) = sum_l (-1)^l q^{(l+1/2)^2/2} t^{l+1/2}, restricted to
// t-exponents (in halves) within [lo_halves, hi_halves].
ZetaLaurent theta_t(std::int64_t lo_halves, std::int64_t hi_halves, Exp8 order);
// All terms of Theta(t) below q^N.
ZetaLaurent theta_t(Exp8 order);

// sum_l zeta^l q^{l^2/2} below q^N.
ZetaLaurent theta_kernel(Exp8 order);

// One cell of a bivariate comparison.
struct CellMismatch {
    std::int64_t var_halves;
    Exp8 q_exponent;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    bool passed = true;
    std::size_t cells_checked = 0;
    std::size_t cells_skipped = 0;
    std::optional<CellMismatch> first_mismatch;
};

// Compares lhs and rhs on every cell (variable exponent in [lo, hi] halves,
// q-exponent on the 1/8 grid below `below`). Variable exponents are visited
// in increasing order, q-exponents increasing within each.
IdentityReport compare_cells(const ZetaLaurent& lhs, const ZetaLaurent& rhs, std::int64_t lo_halves,
                             std::int64_t hi_halves, Exp8 below);

// Jacobi triple product sides below q^N:
//   (q;q)_inf (-q^{1/2} zeta; q)_inf (-q^{1/2}/zeta; q)_inf
// and sum_l zeta^l q^{l^2/2}.
ZetaLaurent jtp_product_side(Exp8 order);
ZetaLaurent jtp_sum_side(Exp8 order);
// Checks the identity on integer zeta-exponents [lo, hi].
IdentityReport jtp_check(Exp8 order, std::int64_t lo, std::int64_t hi);

// Geometric expansions in the annulus 1 > |zeta| > |q^{1/2}|:
//   positive(r): zeta^{-1}q^{r+1/2} / (1 + zeta^{-1}q^{r+1/2})
//              = sum_{l>=0} (-1)^l zeta^{-l-1} q^{(l+1)(r+1/2)}
//   negative(s): 1 / (1 + zeta q^{s+1/2}) = sum_{l>=0} (-1)^l zeta^l q^{l(s+1/2)}
enum class FactorSide { positive, negative };
ZetaLaurent geometric_factor(FactorSide side, int index, Exp8 order);

// prod_pos geometric_factor(positive) * prod_neg geometric_factor(negative)
// * theta_kernel, below q^N. No well-formedness check: colliding indices are
// expanded literally.
ZetaLaurent ct_integrand(std::span<const int> pos, std::span<const int> neg, Exp8 order);

}  // namespace bo
