#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bo/asymptotics.hpp"
#include "bo/closed_forms.hpp"
#include "bo/false_theta.hpp"
#include "bo/fock.hpp"
#include "bo/number_series.hpp"
#include "bo/numeric.hpp"
#include "bo/one_point.hpp"
#include "bo/scan.hpp"
#include "bo/series_json.hpp"
#include "bo/verify.hpp"
#include "published.hpp"

using namespace bo;

namespace {

enum class Format { json, csv, pretty };

struct Config {
    std::vector<int> pos, neg;
    std::string order_text = "100";
    Format format = Format::json;
    bool allow_collision = false;
    unsigned precision = 50;
    std::int64_t scan_limit = 4000;
    int shards = 1;
    std::string out;

    Exp8 order() const { return Exp8::parse(order_text); }
};

// Exit codes beyond CLI11's own.
constexpr int exit_failed_check = 1;
constexpr int exit_malformed = 2;
constexpr int exit_inconsistent = 3;

// Accepts a strictly monotone index list in either direction and returns it decreasing.
std::vector<int> canonical(std::vector<int> v, const char* side)
{
    if (v.size() > 1 && v.front() < v.back())
        std::reverse(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1])
            throw forms::MalformedQuery(std::string("--") + side +
                                        " must list distinct indices in increasing or decreasing order");
    return v;
}

forms::CoeffQuery query_of(const Config& c, bool allow_collision)
{
    forms::CoeffQuery q{canonical(c.pos, "pos"), canonical(c.neg, "neg")};
    if (q.n() == 0)
        throw forms::MalformedQuery("empty query: give at least one of --pos, --neg");
    q.validate(allow_collision);
    return q;
}

Json query_json(const forms::CoeffQuery& q)
{
    return Json{{"pos", q.pos}, {"neg", q.neg}};
}

std::string series_csv(const QSeries& s)
{
    std::ostringstream os;
    os << "exp,coeff\n";
    s.for_each_term([&](Exp8 e, const Integer& c) { os << e.to_string() << ',' << c.get_str() << '\n'; });
    return os.str();
}

std::string series_pretty(const QSeries& s)
{
    return published::pretty(s);
}

Json series_payload(const QSeries& s)
{
    return Json{{"series", to_json(s)}, {"terms", terms_json(s)}};
}

class Emitter {
public:
    explicit Emitter(const Config& c) : cfg_(c) {}

    void emit(const std::string& text) const
    {
        if (cfg_.out.empty()) {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream f(cfg_.out, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot write " + cfg_.out);
        f << text;
    }
    void emit(const Json& j) const { emit(j.dump(2) + "\n"); }

private:
    const Config& cfg_;
};

// ---- coeff ----

int collision_cmd(const Config& c, const forms::CoeffQuery& q, const Emitter& out)
{
    const Exp8 N = c.order();
    const QSeries oracle = fock::oracle_coefficient(fock::make_spec(q.pos, q.neg), N, c.shards);
    const QSeries ct = ct_zeta(ct_integrand(q.pos, q.neg, N));
    const QSeries claim = QSeries::zero(N);
    if (c.format == Format::pretty) {
        std::ostringstream os;
        os << "collision " << q.to_string() << "\n  state enumeration: " << series_pretty(oracle)
           << "\n  constant term:     " << series_pretty(ct) << "\n  vanishing claim:   " << series_pretty(claim)
           << "\n  paths agree: " << (oracle == ct ? "yes" : "no") << "\n";
        out.emit(os.str());
    } else {
        out.emit(Json{{"command", "coeff"},
                      {"query", query_json(q)},
                      {"collision", true},
                      {"oracle", series_payload(oracle)},
                      {"ct_path", series_payload(ct)},
                      {"vanishing_claim", series_payload(claim)},
                      {"paths_agree", oracle == ct}});
    }
    return 0;
}

int coeff_cmd(const Config& c, const std::string& method)
{
    const forms::CoeffQuery q = query_of(c, c.allow_collision);
    const Emitter out(c);
    if (q.has_collision())
        return collision_cmd(c, q, out);
    const QSeries s = method == "ct" ? forms::ct_formula(q, c.order()) : forms::g_multisum(q, c.order());
    switch (c.format) {
    case Format::csv:
        out.emit(series_csv(s));
        break;
    case Format::pretty:
        out.emit(series_pretty(s) + "\n");
        break;
    case Format::json: {
        Json j{{"command", "coeff"}, {"query", query_json(q)}, {"method", method}};
        j.update(series_payload(s));
        out.emit(j);
    }
    }
    return 0;
}

// ---- oracle ----

int oracle_cmd(const Config& c, bool compare)
{
    const forms::CoeffQuery q = query_of(c, c.allow_collision);
    const Exp8 N = c.order();
    const QSeries s = fock::oracle_coefficient(fock::make_spec(q.pos, q.neg), N, c.shards);
    const Emitter out(c);
    Json agree;
    bool ok = true;
    if (compare) {
        if (q.has_collision())
            throw forms::MalformedQuery("--compare needs a collision-free query; the closed forms do not cover collisions");
        const bool ct = s == forms::ct_formula(q, N);
        const bool ms = s == forms::g_multisum(q, N);
        agree = Json{{"ct_formula", ct}, {"g_multisum", ms}};
        ok = ct && ms;
    }
    switch (c.format) {
    case Format::csv:
        out.emit(series_csv(s));
        break;
    case Format::pretty: {
        std::string text = series_pretty(s) + "\n";
        if (compare)
            text += std::string("ct_formula ") + (agree["ct_formula"].get<bool>() ? "agrees" : "DIFFERS") +
                    ", g_multisum " + (agree["g_multisum"].get<bool>() ? "agrees" : "DIFFERS") + "\n";
        out.emit(text);
        break;
    }
    case Format::json: {
        Json j{{"command", "oracle"}, {"query", query_json(q)}};
        j.update(series_payload(s));
        if (compare)
            j["agrees"] = agree;
        out.emit(j);
    }
    }
    return ok ? 0 : exit_failed_check;
}

// ---- falsetheta ----

int falsetheta_cmd(const Config& c, const std::string& pivot)
{
    const forms::CoeffQuery q = query_of(c, false);
    const ft::PivotRule rule = pivot == "reversed" ? ft::PivotRule::reversed : ft::PivotRule::proof_order;
    const ft::Decomposition d = ft::decompose(q, rule);
    const Exp8 N = c.order();
    const bool certified = ft::verify_pair(d.pair, ft::cleared_target(q, N), N) && d.within_bounds();
    const ft::LaurentPoly D = ft::clearing_factor(q);
    const Emitter out(c);
    if (c.format == Format::json) {
        out.emit(Json{{"command", "falsetheta"},
                      {"query", query_json(q)},
                      {"clearing_factor", ft::to_json(D)},
                      {"pair", ft::to_json(d.pair)},
                      {"bounds", {{"P", {d.p_low, d.p_high}}, {"Q", {d.q_low, d.q_high}}}},
                      {"certificate", {{"order", N.to_string()}, {"verified", certified}}}});
    } else {
        std::ostringstream os;
        os << "D = " << D.to_string() << "\nP = " << d.pair.P.to_string() << "\nQ = " << d.pair.Q.to_string()
           << "\nD * series = P*Psi + Q " << (certified ? "verified" : "NOT verified") << " below q^"
           << N.to_string() << "\n";
        out.emit(os.str());
    }
    return certified ? 0 : exit_failed_check;
}

// ---- asym ----

int asym_cmd(const Config& c, int K, const std::vector<std::string>& ys)
{
    const forms::CoeffQuery q = query_of(c, false);
    const asym::AsymExpansion a = q.neg.empty() ? asym::asym_F(q.pos, K) : asym::asym_G(q, K);
    num::PrecisionGuard guard(c.precision);
    const num::Real accuracy = pow(num::Real(10), -static_cast<int>(c.precision) + 20);
    const num::TailMajorant tail = num::TailMajorant::multisum(q.pos, q.neg);

    Json coeffs = Json::array();
    for (std::size_t k = 0; k < a.c.size(); ++k)
        coeffs.push_back(to_json(a.c[k]));
    Json rows = Json::array();
    const int digits = 20;
    for (const std::string& text : ys) {
        const num::Real y(text);
        const Exp8 N = num::required_order(tail, y, accuracy);
        const num::Evaluation ev = num::numeric_eval(forms::g_multisum(q, N), y, tail, accuracy);
        const num::Real ex = num::eval_expansion(a, y, K);
        rows.push_back(Json{{"y", text},
                            {"series", ev.value.str(digits)},
                            {"tail_bound", ev.tail_bound.str(3)},
                            {"expansion", ex.str(digits)},
                            {"difference", num::Real(ev.value - ex).str(6)}});
    }
    const Emitter out(c);
    if (c.format == Format::json) {
        out.emit(Json{{"command", "asym"}, {"query", query_json(q)}, {"K", K}, {"coefficients", coeffs}, {"numeric", rows}});
    } else if (c.format == Format::csv) {
        std::string text = "y,series,expansion,difference\n";
        for (const auto& r : rows)
            text += r["y"].get<std::string>() + "," + r["series"].get<std::string>() + "," +
                    r["expansion"].get<std::string>() + "," + r["difference"].get<std::string>() + "\n";
        out.emit(text);
    } else {
        std::ostringstream os;
        os << "series ~ sum_k c_k (pi y)^k at q = e^{-y}\n";
        for (std::size_t k = 0; k < a.c.size(); ++k)
            os << "  c_" << k << " = " << a.c[k].get_str() << "\n";
        for (const auto& r : rows)
            os << "  y=" << r["y"].get<std::string>() << ": series " << r["series"].get<std::string>()
               << ", expansion " << r["expansion"].get<std::string>() << ", diff " << r["difference"].get<std::string>()
               << "\n";
        out.emit(os.str());
    }
    return 0;
}

// ---- scan ----

int scan_cmd(const Config& c, const std::string& column)
{
    const forms::CoeffQuery q = query_of(c, false);
    scan::Table t;
    if (q.neg.empty() && column == "b")
        t = scan::scan_F(q.pos, c.scan_limit);
    else {
        const scan::GColumn col = column == "odd"    ? scan::GColumn::odd
                                  : column == "even" ? scan::GColumn::even
                                                     : scan::GColumn::normalized;
        t = scan::scan_G(q, c.scan_limit, col);
    }
    const Emitter out(c);
    if (c.format == Format::json) {
        Json j = t.json();
        j["command"] = "scan";
        j["query"] = query_json(q);
        out.emit(j);
    } else {
        out.emit(t.csv());
    }
    return 0;
}

// ---- verify ----

int verify_cmd(const Config& c, bool criteria_only)
{
    std::vector<verify::Criterion> all = verify::properties();
    if (criteria_only)
        all.clear();
    for (auto& cr : verify::criteria())
        all.push_back(std::move(cr));
    Json rows = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& cr : all) {
        const verify::Outcome o = verify::run_timed(cr);
        ok = ok && o.passed;
        rows.push_back(verify::to_json(o));
        text += std::string(o.passed ? "PASS " : "FAIL ") + std::to_string(o.id) + "  " + o.name + "\n     " +
                o.detail + "\n";
        if (c.format != Format::json && c.out.empty()) {
            std::cout << text;
            std::cout.flush();
            text.clear();
        }
    }
    const Emitter out(c);
    if (c.format == Format::json)
        out.emit(Json{{"command", "verify"}, {"passed", ok}, {"results", rows}});
    else if (!c.out.empty())
        out.emit(text);
    return ok ? 0 : exit_failed_check;
}

// ---- examples ----

int examples_cmd(const Config& c)
{
    Json rows = Json::array();
    std::string text;
    int diffs = 0;
    for (const published::Example& ex : published::examples()) {
        std::string got;
        try {
            got = ex.compute();
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        const bool same = got == ex.expected;
        diffs += !same;
        rows.push_back(Json{{"name", ex.name}, {"expected", ex.expected}, {"computed", got}, {"match", same}});
        text += std::string(same ? "same " : "DIFF ") + ex.name + "\n";
        if (!same)
            text += "     expected " + ex.expected + "\n     computed " + got + "\n";
    }
    const Emitter out(c);
    if (c.format == Format::json)
        out.emit(Json{{"command", "examples"}, {"differences", diffs}, {"examples", rows}});
    else
        out.emit(text + std::to_string(diffs) + " of " + std::to_string(rows.size()) + " differ\n");
    return diffs ? exit_failed_check : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fourier coefficients of the n-point function: exact series, false theta decompositions, asymptotics"};
    app.require_subcommand(1);
    Config cfg;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
    auto query_opts = [&](CLI::App* s) {
        s->add_option("--pos", cfg.pos, "indices r (comma separated)")->delimiter(',');
        s->add_option("--neg", cfg.neg, "indices s (comma separated)")->delimiter(',');
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "json, csv or pretty (scan defaults to csv)")
            ->transform(CLI::CheckedTransformer(formats));
        s->add_option("--out", cfg.out, "write the payload to this file");
    };
    auto order_opt = [&](CLI::App* s) {
        s->add_option("--order", cfg.order_text, "truncation exponent N (series known below q^N)")->capture_default_str();
    };

    auto* coeff = app.add_subcommand("coeff", "Fourier coefficient as a q-series");
    std::string method = "multisum";
    query_opts(coeff);
    order_opt(coeff);
    common(coeff);
    coeff->add_option("--method", method, "multisum or ct")->check(CLI::IsMember({"multisum", "ct"}));
    coeff->add_flag("--allow-collision", cfg.allow_collision, "report a colliding query instead of rejecting it");

    auto* oracle = app.add_subcommand("oracle", "coefficient from the Fock space trace");
    bool compare = false;
    query_opts(oracle);
    order_opt(oracle);
    common(oracle);
    oracle->add_option("--shards", cfg.shards, "worker threads over weight layers")->check(CLI::Range(1, 256));
    oracle->add_flag("--compare", compare, "also check against the constant term and the multi-sum");
    oracle->add_flag("--allow-collision", cfg.allow_collision, "enumerate a colliding query");

    auto* falsetheta = app.add_subcommand("falsetheta", "false theta decomposition with certificate");
    std::string pivot = "proof";
    query_opts(falsetheta);
    order_opt(falsetheta);
    common(falsetheta);
    falsetheta->add_option("--pivot", pivot, "proof or reversed")->check(CLI::IsMember({"proof", "reversed"}));

    auto* asymc = app.add_subcommand("asym", "asymptotic expansion at q = e^{-y}, y -> 0");
    int K = 3;
    std::vector<std::string> ys{"0.1", "0.05", "0.025"};
    query_opts(asymc);
    common(asymc);
    asymc->add_option("--K", K, "expansion order")->check(CLI::Range(0, 40))->capture_default_str();
    asymc->add_option("--y", ys, "evaluation points")->delimiter(',');
    asymc->add_option("--precision", cfg.precision, "decimal digits")->check(CLI::Range(30u, 2000u))->capture_default_str();

    auto* scanc = app.add_subcommand("scan", "coefficient ratio table 2^n b_l / p(l)");
    std::string column = "b";
    query_opts(scanc);
    common(scanc);
    scanc->add_option("--scan-limit", cfg.scan_limit, "largest l")->check(CLI::Range(1, 1000000))->capture_default_str();
    scanc->add_option("--column", column, "b (F only), even, odd or normalized")
        ->check(CLI::IsMember({"b", "even", "odd", "normalized"}));

    auto* verifyc = app.add_subcommand("verify", "run the property suite and the numbered checks");
    bool criteria_only = false;
    common(verifyc);
    verifyc->add_flag("--criteria-only", criteria_only, "skip the structural properties");

    auto* examplesc = app.add_subcommand("examples", "recompute the published values and diff them");
    common(examplesc);

    CLI11_PARSE(app, argc, argv);
    if (cfg.format == Format::csv && (falsetheta->parsed() || verifyc->parsed()))
        cfg.format = Format::pretty;

    try {
        if (coeff->parsed())
            return coeff_cmd(cfg, method);
        if (oracle->parsed())
            return oracle_cmd(cfg, compare);
        if (falsetheta->parsed())
            return falsetheta_cmd(cfg, pivot);
        if (asymc->parsed())
            return asym_cmd(cfg, K, ys);
        if (scanc->parsed()) {
            if (cfg.format == Format::pretty || scanc->get_option("--format")->count() == 0)
                cfg.format = Format::csv;
            return scan_cmd(cfg, column);
        }
        if (verifyc->parsed())
            return verify_cmd(cfg, criteria_only);
        if (examplesc->parsed())
            return examples_cmd(cfg);
    } catch (const forms::MalformedQuery& e) {
        std::cerr << "malformed query: " << e.what() << "\n";
        return exit_malformed;
    } catch (const ft::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n" << e.offending() << "\n";
        return exit_inconsistent;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad argument: " << e.what() << "\n";
        return exit_malformed;
    } catch (const std::domain_error& e) {
        std::cerr << "bad argument: " << e.what() << "\n";
        return exit_malformed;
    }
    return 0;
}
