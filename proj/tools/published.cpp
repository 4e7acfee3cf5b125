#include "published.hpp"

#include <sstream>

#include "bo/asymptotics.hpp"
#include "bo/closed_forms.hpp"
#include "bo/false_theta.hpp"
#include "bo/fock.hpp"
#include "bo/number_series.hpp"
#include "bo/numeric.hpp"
#include "bo/one_point.hpp"
#include "bo/scan.hpp"

namespace published {

using namespace bo;

std::string pretty(const QSeries& s)
{
    std::ostringstream os;
    bool first = true;
    s.for_each_term([&](Exp8 e, const Integer& c) {
        const bool neg = sgn(c) < 0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        const Integer a = abs(c);
        if (a != 1 || e == Exp8{0})
            os << a.get_str();
        if (e != Exp8{0})
            os << (a != 1 ? "*" : "") << "q"
               << (e == Exp8::integer(1) ? "" : "^" + (e.is_integer() ? e.to_string() : "(" + e.to_string() + ")"));
        first = false;
    });
    if (first)
        os << '0';
    os << " + O(q^" << s.order().to_string() << ")";
    return os.str();
}

namespace {

std::string yes(bool b)
{
    return b ? "true" : "false";
}

Exp8 q(std::int64_t n)
{
    return Exp8::integer(n);
}

std::vector<Example> build()
{
    std::vector<Example> out;
    auto add = [&](std::string name, std::string expected, std::function<std::string()> f) {
        out.push_back({std::move(name), std::move(expected), std::move(f)});
    };

    for (auto [h, want] : {std::pair{1, "q^(1/8) + O(q^4)"}, std::pair{-1, "-q^(1/8) + O(q^4)"},
                           std::pair{3, "-q^(9/8) + O(q^4)"}})
        add("Theta(t), coefficient of t^" + Exp8::halves(h).to_string(), want,
            [h] { return pretty(theta_t(q(4)).at(h)); });

    add("triple product to q^50 on zeta^[-8,8]", "true", [] { return yes(jtp_check(q(50), -8, 8).passed); });
    add("constant term, n=1, r=0", "q - q^3 + q^6 + O(q^10)", [] {
        const int r[1] = {0};
        return pretty(ct_zeta(ct_integrand(r, {}, q(10))));
    });
    add("positive factor r=0, leading term", "zeta^-1 q^(1/2)", [] {
        const ZetaLaurent f = geometric_factor(FactorSide::positive, 0, q(4));
        const auto& [key, c] = *f.terms().rbegin();
        return "zeta^" + std::to_string(key / 2) + " q^(" + c.valuation().to_string() + ")" +
               (c.leading_coefficient() == 1 ? "" : " coeff " + c.leading_coefficient().get_str());
    });
    add("trace oracle [pos 0] to q^8", "q - q^3 + q^6 + O(q^8)", [] {
        const int r[1] = {0};
        return pretty(fock::oracle_coefficient(fock::make_spec(r, {}), q(8)));
    });
    add("trace oracle [neg 0] to q^8", "1 - q + q^3 - q^6 + O(q^8)", [] {
        const int s[1] = {0};
        return pretty(fock::oracle_coefficient(fock::make_spec({}, s), q(8)));
    });
    add("compress [pos 3, pos 3]", "[pos 3]", [] {
        using K = fock::ModeRequest::Kind;
        const std::vector<fock::ModeRequest> raw{{K::pos, 3}, {K::pos, 3}};
        std::string s = "[";
        for (const auto& e : fock::compress(raw).entries)
            s += std::string(s.size() > 1 ? ", " : "") + (e.kind == K::pos ? "pos " : "neg ") + std::to_string(e.index);
        return s + "]";
    });
    add("vanishing claim for the collision r=0 to q^6", "0 + O(q^6)",
        [] { return pretty(fock::collision_report(0, q(6)).vanishing_claim); });
    add("multi-sum pos=(0)", "q - q^3 + q^6 - q^10 + O(q^12)", [] { return pretty(forms::f_multisum({0}, q(12))); });
    add("multi-sum neg=(0)", "1 - q + q^3 - q^6 + O(q^10)",
        [] { return pretty(forms::g_multisum({{}, {0}}, q(10))); });
    add("constant term formula pos=(0)", "q - q^3 + q^6 + O(q^10)",
        [] { return pretty(forms::ct_formula({{0}, {}}, q(10))); });
    add("constant term formula neg=(0)", "1 - q + q^3 - q^6 + O(q^10)",
        [] { return pretty(forms::ct_formula({{}, {0}}, q(10))); });
    add("closed form n=1, s=0", "1 - q + q^3 - q^6 + O(q^10)", [] { return pretty(forms::example_n1_neg(0, q(10))); });
    add("one-point identity n=1, J=10, to q^20", "true",
        [] { return yes(one_point_n1_check(10, q(20)).cells.passed); });
    add("Psi(q) first terms", "1 - q + q^3 - q^6 + q^10 + O(q^15)", [] { return pretty(ft::psi(q(15))); });
    add("Psi(q) equals the neg=(0) multi-sum to q^30", "true",
        [] { return yes(ft::psi(q(30)) == forms::g_multisum({{}, {0}}, q(30))); });
    add("E_0(1), E_1(1), E_2(1)", "1, 1/2, 0", [] {
        const auto t = asym::euler_values(2);
        return t.at_one[0].get_str() + ", " + t.at_one[1].get_str() + ", " + t.at_one[2].get_str();
    });
    add("leading asymptotic coefficient, F pos=(1,0)", "1/4", [] { return asym::asym_F({1, 0}, 1).c[0].get_str(); });
    add("leading asymptotic coefficient, G pos=(0) neg=(1)", "1/4",
        [] { return asym::asym_G({{0}, {1}}, 1).c[0].get_str(); });

    auto table_series = [] {
        static const QSeries s = forms::f_multisum({5, 4, 3, 2}, q(900));
        return &s;
    };
    for (auto [e, v] : {std::pair{43, "2"}, std::pair{100, "-7"}, std::pair{153, "18"}, std::pair{245, "-2"},
                        std::pair{538, "-81"}, std::pair{713, "112"}, std::pair{894, "-4"}})
        add("multi-sum pos=(5,4,3,2), coefficient of q^" + std::to_string(e), v,
            [e, table_series] { return table_series()->coefficient(q(e)).get_str(); });
    add("b_l >= 0 for pos=(5,4,3,2), l <= 4000", "true",
        [] { return yes(scan::scan_F({5, 4, 3, 2}, 4000).all_nonnegative()); });
    add("theta transformation at z=0, y=0.1 within its bound", "true", [] {
        num::PrecisionGuard g(50);
        return yes(num::theta_transform_check(num::Real(0), num::Real("0.1")).within_bound());
    });
    add("false theta pair pos=(0)", "P=-1, Q=1", [] {
        const auto p = ft::decompose_F({0});
        const bool ok = p.P == ft::LaurentPoly::constant(-1) && p.Q == ft::LaurentPoly::constant(1);
        return ok ? std::string("P=-1, Q=1") : "P=" + p.P.to_string() + ", Q=" + p.Q.to_string();
    });
    return out;
}

}  // namespace

const std::vector<Example>& examples()
{
    static const std::vector<Example> all = build();
    return all;
}

}  // namespace published
