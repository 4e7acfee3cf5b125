#include "bo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "bo/asymptotics.hpp"
#include "bo/false_theta.hpp"
#include "bo/fock.hpp"
#include "bo/number_series.hpp"
#include "bo/numeric.hpp"
#include "bo/one_point.hpp"
#include "bo/scan.hpp"

namespace bo::verify {

namespace {

Outcome result(bool ok, std::string detail)
{
    Outcome o;
    o.passed = ok;
    o.detail = std::move(detail);
    return o;
}

std::string cell_text(const IdentityReport& r)
{
    std::ostringstream os;
    os << r.cells_checked << " cells";
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        os << ", first mismatch at t^" << Exp8::halves(m.var_halves).to_string() << " q^" << m.q_exponent.to_string()
           << ": " << m.lhs.get_str() << " vs " << m.rhs.get_str();
    }
    return os.str();
}

Outcome three_way()
{
    const Exp8 N = Exp8::integer(24);
    std::size_t count = 0;
    for (const auto& q : query_grid()) {
        const QSeries oracle = fock::oracle_coefficient(fock::make_spec(q.pos, q.neg), N);
        const QSeries ct = forms::ct_formula(q, N);
        const QSeries ms = forms::g_multisum(q, N);
        if (!(oracle == ct) || !(ct == ms))
            return result(false, "disagreement for " + q.to_string());
        ++count;
    }
    return result(true, std::to_string(count) + " queries agree to q^24");
}

Outcome coefficient_table()
{
    const std::map<int, long> table{{43, 2}, {100, -7}, {153, 18}, {245, -2}, {538, -81}, {713, 112}, {894, -4}};
    const QSeries f = forms::f_multisum({5, 4, 3, 2}, Exp8::integer(900));
    std::ostringstream os;
    bool ok = true;
    for (const auto& [e, v] : table) {
        const Integer got = f.coefficient(Exp8::integer(e));
        if (got != v) {
            ok = false;
            os << "a_" << e << ": computed " << got.get_str() << ", table " << v << "; ";
        }
    }
    if (ok)
        os << "all 7 table entries reproduced";
    return result(ok, os.str());
}

Outcome one_point_identity()
{
    std::ostringstream os;
    bool ok = true;
    for (auto [J, N] : {std::pair{10, 20}, std::pair{14, 40}}) {
        const auto lit = one_point_n1_check(J, Exp8::integer(N));
        OnePointOptions eta;
        eta.target = OnePointTarget::eta_cubed;
        const auto norm = one_point_n1_check(J, Exp8::integer(N), eta);
        ok = ok && lit.cells.passed;
        os << "(J=" << J << ", q^" << N << ") target 1: " << (lit.cells.passed ? "pass" : "FAIL") << " ["
           << cell_text(lit.cells) << "]; target eta^3: " << (norm.cells.passed ? "pass" : "FAIL") << "; ";
    }
    return result(ok, os.str());
}

Outcome triple_product()
{
    const auto r = jtp_check(Exp8::integer(50), -8, 8);
    return result(r.passed, cell_text(r));
}

Outcome false_theta_round_trip()
{
    const Exp8 N = Exp8::integer(300);
    std::size_t count = 0;
    for (const auto& q : query_grid()) {
        ft::Decomposition d;
        try {
            d = ft::decompose(q);
        } catch (const ft::ConsistencyError& e) {
            return result(false, std::string(e.what()) + ": " + e.offending());
        }
        if (!ft::verify_pair(d.pair, ft::cleared_target(q, N), N))
            return result(false, "pair does not reproduce the cleared series for " + q.to_string());
        if (!d.within_bounds())
            return result(false, "support bound exceeded for " + q.to_string());
        ++count;
    }
    for (int r = 0; r <= 10; ++r)
        if (!(ft::decompose_F({r}) == ft::n1_closed_form(r)))
            return result(false, "n = 1 closed form differs at r = " + std::to_string(r));
    return result(true, std::to_string(count) + " decompositions exact and verified to q^300; n = 1 closed form for r <= 10");
}

Outcome first_order_identities()
{
    std::size_t count = 0;
    for (const auto& q : query_grid()) {
        if (q.neg.empty() && asym::asym_F(q.pos, 1).c[1] != asym::first_order_c1_F(q.pos))
            return result(false, "F first-order coefficient differs for " + q.to_string());
        if (asym::asym_G(q, 1).c[1] != asym::first_order_c1_G(q))
            return result(false, "G first-order coefficient differs for " + q.to_string());
        ++count;
    }
    return result(true, std::to_string(count) + " queries, exact rational equality");
}

Outcome numeric_orders()
{
    num::PrecisionGuard guard(50);
    const std::vector<num::Real> ys{num::Real("0.1"), num::Real("0.05"), num::Real("0.025")};
    const num::Real accuracy("1e-30");
    std::ostringstream os;
    bool ok = true;
    for (const forms::CoeffQuery& q : {forms::CoeffQuery{{0}, {}}, forms::CoeffQuery{{1, 0}, {}}, forms::CoeffQuery{{0}, {1}}}) {
        const auto a = q.neg.empty() ? asym::asym_F(q.pos, 4) : asym::asym_G(q, 4);
        const auto run = num::convergence_order([&](Exp8 N) { return forms::g_multisum(q, N); },
                                                num::TailMajorant::multisum(q.pos, q.neg), a, 3, ys, accuracy);
        os << q.to_string() << " orders";
        for (const auto& o : run.orders) {
            os << ' ' << o.str(4);
            ok = ok && o >= num::Real("3.7");
        }
        os << "; ";
    }
    return result(ok, os.str());
}

Outcome ratio_scan()
{
    std::ostringstream os;
    os.precision(5);
    bool ok = true;
    for (const std::vector<int>& r : {std::vector<int>{0}, std::vector<int>{1, 0}, std::vector<int>{5, 4, 3, 2}}) {
        const auto t = scan::scan_F(r, 4000);
        const double d1000 = std::abs(t.at(1000).ratio - 1);
        const double d4000 = std::abs(t.at(4000).ratio - 1);
        const bool here = d4000 < d1000 && d4000 < 0.15 && t.all_nonnegative();
        ok = ok && here;
        os << forms::CoeffQuery{r, {}}.to_string() << ": ratio(1000)=" << t.at(1000).ratio
           << " ratio(4000)=" << t.at(4000).ratio << " nonneg=" << (t.all_nonnegative() ? "yes" : "no")
           << (here ? "" : " FAIL") << "; ";
    }
    return result(ok, os.str());
}

Outcome collision_ledger()
{
    std::ostringstream os;
    bool ok = true;
    for (int r = 0; r <= 3; ++r) {
        const auto rep = fock::collision_report(r, Exp8::integer(20));
        ok = ok && rep.paths_agree() && rep.vanishing_claim.is_zero();
        os << "r=" << r << ": paths " << (rep.paths_agree() ? "agree" : "DIFFER") << ", valuation "
           << rep.oracle.valuation().to_string() << "; ";
    }
    return result(ok, os.str());
}

Outcome inverse_theta()
{
    std::ostringstream os;
    bool ok = true;
    for (int l = 1; l <= 3; ++l) {
        const auto r = inverse_theta_check(l, 24, Exp8::integer(10));
        ok = ok && r.cells.passed;
        os << "l=" << l << ": " << cell_text(r.cells) << " certified, " << r.uncertified << " uncertified; ";
    }
    return result(ok, os.str());
}

}  // namespace

std::vector<forms::CoeffQuery> query_grid(int max_index, int max_n)
{
    std::vector<forms::CoeffQuery> out;
    const int k = max_index + 1;
    // Each index is absent, positive or negative: base-3 digits.
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i)
        total *= 3;
    for (std::int64_t code = 1; code < total; ++code) {
        forms::CoeffQuery q;
        std::int64_t c = code;
        for (int i = 0; i < k; ++i, c /= 3) {
            if (c % 3 == 1)
                q.pos.push_back(i);
            else if (c % 3 == 2)
                q.neg.push_back(i);
        }
        if (q.n() > max_n)
            continue;
        std::reverse(q.pos.begin(), q.pos.end());
        std::reverse(q.neg.begin(), q.neg.end());
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(), [](const forms::CoeffQuery& a, const forms::CoeffQuery& b) {
        return std::tie(a.pos, a.neg) < std::tie(b.pos, b.neg);
    });
    return out;
}

std::vector<Criterion> criteria()
{
    return {
        {1, "three-way equivalence (oracle, constant term, multi-sum) to q^24", three_way},
        {2, "coefficient table for r=(2,3,4,5) to q^900", coefficient_table},
        {3, "one-point identity sum f_j t^{j+1/2} Theta(t) = 1 (n=1)", one_point_identity},
        {4, "Jacobi triple product to q^50 on zeta^[-8,8]", triple_product},
        {5, "false theta decomposition exact and verified to q^300", false_theta_round_trip},
        {6, "first-order asymptotic coefficients as exact identities", first_order_identities},
        {7, "numeric asymptotics, empirical order >= 3.7 at K=3", numeric_orders},
        {8, "coefficient ratio 2^n b_l / p(l) approaches 1", ratio_scan},
        {9, "collision ledger: both oracle paths agree", collision_ledger},
        {10, "inverse theta powers times Theta^l = 1 on certified cells", inverse_theta},
    };
}

std::vector<Criterion> properties()
{
    std::vector<Criterion> out;
    out.push_back({101, "compress is idempotent and trace preserving", [] {
                       using K = fock::ModeRequest::Kind;
                       const std::vector<fock::ModeRequest> raw{{K::pos, 1}, {K::neg, 1}, {K::pos, 1}, {K::neg, 2}, {K::neg, 2}};
                       const auto once = fock::compress(raw);
                       const auto twice = fock::compress(once.entries);
                       fock::ExponentSpec literal{raw};
                       const Exp8 N = Exp8::integer(20);
                       const bool ok = once == twice &&
                                       fock::oracle_coefficient(literal, N) == fock::oracle_coefficient(once, N);
                       return result(ok, "spec [pos 1, neg 1, pos 1, neg 2, neg 2] to q^20");
                   }});
    out.push_back({102, "oracle is invariant under permuting the spec", [] {
                       using K = fock::ModeRequest::Kind;
                       std::vector<fock::ModeRequest> e{{K::pos, 3}, {K::pos, 0}, {K::neg, 2}, {K::neg, 1}};
                       const Exp8 N = Exp8::integer(20);
                       const QSeries ref = fock::oracle_coefficient({e}, N);
                       std::sort(e.begin(), e.end(), [](auto a, auto b) { return a.index < b.index; });
                       bool ok = true;
                       do {
                           ok = ok && fock::oracle_coefficient({e}, N) == ref;
                       } while (std::next_permutation(e.begin(), e.end(), [](auto a, auto b) { return a.index < b.index; }));
                       return result(ok, "all 24 orderings of [pos 3, pos 0, neg 2, neg 1] to q^20");
                   }});
    out.push_back({103, "state counter equals the constant term of the fermionic product", [] {
                       const Exp8 N = Exp8::integer(20);
                       ZetaLaurent prod = ZetaLaurent::one(N);
                       for (std::int64_t k = 0; Exp8::halves(2 * k + 1) < N; ++k) {
                           ZetaLaurent f = ZetaLaurent::one(N);
                           f.add(2, QSeries::monomial(Exp8::halves(2 * k + 1), 1, N));
                           ZetaLaurent g = ZetaLaurent::one(N);
                           g.add(-2, QSeries::monomial(Exp8::halves(2 * k + 1), 1, N));
                           prod = prod * f * g;
                       }
                       const bool ok = fock::state_count_series(N) == ct_zeta(prod) &&
                                       fock::state_count_series(N) == partition_series(N);
                       return result(ok, "to q^20");
                   }});
    out.push_back({104, "distinct odd part pairs reproduce oracle / (q;q)_inf", [] {
                       const Exp8 N = Exp8::integer(24);
                       std::size_t count = 0;
                       for (const auto& q : query_grid(5, 3)) {
                           if (!q.neg.empty())
                               continue;
                           const QSeries lhs = fock::partition_pair_count(q.pos, N);
                           const QSeries rhs = fock::oracle_coefficient(fock::make_spec(q.pos, {}), N) * partition_series(N);
                           if (!(lhs == rhs))
                               return result(false, "differs for " + q.to_string());
                           ++count;
                       }
                       return result(true, std::to_string(count) + " index sets to q^24");
                   }});
    out.push_back({105, "pivot order does not change the false theta pair", [] {
                       std::size_t count = 0;
                       for (const auto& q : query_grid(6, 4))
                           if (!(ft::decompose(q).pair == ft::decompose(q, ft::PivotRule::reversed).pair))
                               return result(false, "differs for " + q.to_string());
                           else
                               ++count;
                       return result(true, std::to_string(count) + " queries");
                   }});
    out.push_back({106, "Euler table matches the recurrence", [] {
                       const auto t = asym::euler_values(16);
                       const bool ok = t.at_one == asym::euler_by_recurrence(16, 1) &&
                                       t.at_zero == asym::euler_by_recurrence(16, 0);
                       return result(ok, "indices 0..16");
                   }});
    out.push_back({107, "truncation orders are never optimistic", [] {
                       std::mt19937_64 rng(20261016);
                       std::uniform_int_distribution<int> coef(-3, 3), len(1, 12), val(0, 6);
                       auto random_series = [&](Exp8 order) {
                           std::vector<Term> t;
                           const int n = len(rng);
                           for (int i = 0; i < 4 * n; ++i)
                               t.push_back({Exp8::halves(val(rng) + i), coef(rng)});
                           return QSeries::from_terms(t, order);
                       };
                       for (int trial = 0; trial < 200; ++trial) {
                           std::vector<Term> a_terms, b_terms;
                           const QSeries a2 = random_series(Exp8::integer(40));
                           const QSeries b2 = random_series(Exp8::integer(40));
                           const QSeries a = a2.truncated(Exp8::integer(20));
                           const QSeries b = b2.truncated(Exp8::integer(20));
                           const QSeries s = a + b, p = a * b;
                           if (!s.agrees_below(a2 + b2, s.order()) || !p.agrees_below(a2 * b2, p.order()))
                               return result(false, "trial " + std::to_string(trial));
                       }
                       return result(true, "200 random pairs, doubled-order recomputation");
                   }});
    out.push_back({108, "reciprocal of (q;q)_inf is the partition series", [] {
                       const Exp8 N = Exp8::integer(60);
                       const QSeries e = euler_pochhammer(N);
                       const bool ok = e.reciprocal() == partition_series(N) &&
                                       (e * e.reciprocal()) == QSeries::one(N);
                       return result(ok, "to q^60");
                   }});
    out.push_back({109, "theta transformation within its exponential bound", [] {
                       num::PrecisionGuard guard(50);
                       bool ok = true;
                       for (auto [z, y] : {std::pair{"0", "0.1"}, std::pair{"0.25", "0.05"}, std::pair{"-0.25", "0.05"},
                                           std::pair{"0.45", "0.2"}})
                           ok = ok && num::theta_transform_check(num::Real(z), num::Real(y)).within_bound();
                       return result(ok, "(z,y) in {(0,0.1),(+-0.25,0.05),(0.45,0.2)}");
                   }});
    return out;
}

Outcome run_timed(const Criterion& c)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = result(false, std::string("exception: ") + e.what());
    }
    o.id = c.id;
    o.name = c.name;
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

Json to_json(const Outcome& o)
{
    return Json{{"id", o.id}, {"name", o.name}, {"passed", o.passed}, {"detail", o.detail}};
}

}  // namespace bo::verify
