#include "bo/scan.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <stdexcept>

#include <mpfr.h>

#include "bo/number_series.hpp"

namespace bo::scan {

namespace {

double ratio(const Integer& c, const Integer& p, int n)
{
    mpq_class r(c, p);
    r.canonicalize();
    r *= Integer(1) << static_cast<unsigned>(n);
    // mpq get_d truncates; round once to nearest instead.
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
    const double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

Table build(std::string kind, std::string column, int n, const QSeries& s, std::int64_t L, std::int64_t step,
            std::int64_t offset)
{
    const auto p = partition_numbers(L);
    Table t{std::move(kind), std::move(column), n, {}};
    t.rows.reserve(static_cast<std::size_t>(L + 1));
    for (std::int64_t l = 0; l <= L; ++l) {
        const Integer c = s.coefficient(Exp8::integer(step * l + offset));
        t.rows.push_back({l, c, p[static_cast<std::size_t>(l)], ratio(c, p[static_cast<std::size_t>(l)], n)});
    }
    return t;
}

}  // namespace

const Row& Table::at(std::int64_t l) const
{
    if (l < 0 || l >= static_cast<std::int64_t>(rows.size()))
        throw std::out_of_range("scan row " + std::to_string(l) + " not computed");
    return rows[static_cast<std::size_t>(l)];
}

bool Table::all_nonnegative() const
{
    for (const auto& r : rows)
        if (sgn(r.coefficient) < 0)
            return false;
    return true;
}

std::string Table::csv() const
{
    std::ostringstream os;
    os << "l,coefficient,partitions,ratio\n";
    char buf[32];
    for (const auto& r : rows) {
        // Shortest text that reads back to the same double.
        const auto end = std::to_chars(buf, buf + sizeof buf, r.ratio).ptr;
        os << r.l << ',' << r.coefficient.get_str() << ',' << r.partitions.get_str() << ','
           << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
    }
    return os.str();
}

Json Table::json() const
{
    Json rows_j = Json::array();
    for (const auto& r : rows)
        rows_j.push_back({{"l", r.l},
                          {"coefficient", r.coefficient.get_str()},
                          {"partitions", r.partitions.get_str()},
                          {"ratio", r.ratio}});
    return Json{{"kind", kind}, {"column", column}, {"n", n}, {"rows", std::move(rows_j)}};
}

Table scan_F(const std::vector<int>& r, std::int64_t L)
{
    if (L < 0)
        throw std::domain_error("scan limit must be non-negative");
    const Exp8 N = Exp8::integer(L + 1);
    const QSeries b = forms::f_multisum(r, N) * partition_series(N);
    return build("F", "b_l", static_cast<int>(r.size()), b, L, 1, 0);
}

Table scan_G(const forms::CoeffQuery& q, std::int64_t L, GColumn column)
{
    if (L < 0)
        throw std::domain_error("scan limit must be non-negative");
    switch (column) {
    case GColumn::even:
        return build("G", "c_2l", q.n(), forms::g_multisum(q, Exp8::integer(2 * L + 1)), L, 2, 0);
    case GColumn::odd:
        return build("G", "c_2l+1", q.n(), forms::g_multisum(q, Exp8::integer(2 * L + 2)), L, 2, 1);
    case GColumn::normalized: {
        const Exp8 N = Exp8::integer(L + 1);
        return build("G", "d_l", q.n(), forms::g_multisum(q, N) * partition_series(N), L, 1, 0);
    }
    }
    throw std::logic_error("unknown scan column");
}

}  // namespace bo::scan
