#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bo/qseries.hpp"

namespace bo::fock {

// Occupations of the charge-zero fermionic Fock space: S holds the psi-modes
// a (mode -a-1/2), T the psi*-modes. Both ascending, |S| == |T|.
struct FockState {
    std::vector<int> S;
    std::vector<int> T;

    // sum(a+1/2) + sum(b+1/2); always an integer on the charge-zero space.
    std::int64_t weight() const;
    int charge() const { return static_cast<int>(S.size()) - static_cast<int>(T.size()); }
    friend auto operator<=>(const FockState&, const FockState&) = default;
};

// pos r extracts t^{r+1/2}, neg s extracts t^{-s-1/2}.
struct ModeRequest {
    enum class Kind { pos, neg };
    Kind kind;
    int index;
    friend bool operator==(const ModeRequest&, const ModeRequest&) = default;
};

struct ExponentSpec {
    std::vector<ModeRequest> entries;

    std::vector<int> pos() const;
    std::vector<int> neg() const;
    // Some index requested both as pos and neg.
    bool has_collision() const;
    friend bool operator==(const ExponentSpec&, const ExponentSpec&) = default;
};

ExponentSpec make_spec(std::span<const int> pos, std::span<const int> neg);

// Drops repeated pos/neg entries, keeping the first occurrence.
ExponentSpec compress(std::span<const ModeRequest> raw);

// Visits every charge-zero state of weight < order, by weight and then
// lexicographically on (S, T).
void for_each_state(Exp8 order, const std::function<void(const FockState&)>& visit);
std::vector<FockState> enumerate_states(Exp8 order);

// sum over states of q^weight, i.e. the state counter (no (q;q)_inf factor).
QSeries state_count_series(Exp8 order);

// sum over states of q^weight * prod_pos [r in T] * prod_neg (1 - [s in S]).
// Weight layers are split over `shards` threads and merged in weight order.
QSeries raw_trace(const ExponentSpec& spec, Exp8 order, int shards = 1);

// (q;q)_inf * raw_trace. Colliding specs are evaluated literally.
QSeries oracle_coefficient(const ExponentSpec& spec, Exp8 order, int shards = 1);

struct CollisionReport {
    int index;
    QSeries oracle;      // state enumeration of [pos r, neg r]
    QSeries ct_path;     // constant-term integrand with both factors, expanded literally
    QSeries vanishing_claim; // the vanishing claim, emitted verbatim
    bool paths_agree() const { return oracle == ct_path; }
};
CollisionReport collision_report(int r, Exp8 order);

// Pairs (pi, pi') of partitions into distinct odd parts with
// l(pi) - l(pi') = n, pi' avoiding every part 2r_j+1, weighted by
// (|pi| + |pi'|)/2 + sum(r_j + 1/2). Computed by a part-by-part DP, without
// touching the state enumerator; equals oracle_coefficient(pos r)/(q;q)_inf.
QSeries partition_pair_count(std::span<const int> r, Exp8 order);

}  // namespace bo::fock
