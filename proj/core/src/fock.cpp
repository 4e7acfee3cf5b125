#include "bo/fock.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <memory>
#include <thread>

#include "bo/number_series.hpp"
#include "bo/zeta_laurent.hpp"

namespace bo::fock {

std::int64_t FockState::weight() const
{
    const std::int64_t s = std::accumulate(S.begin(), S.end(), std::int64_t{0});
    const std::int64_t t = std::accumulate(T.begin(), T.end(), std::int64_t{0});
    // (|S| + |T|)/2 halves; charge zero makes it |S|.
    return s + t + static_cast<std::int64_t>(S.size() + T.size()) / 2;
}

std::vector<int> ExponentSpec::pos() const
{
    std::vector<int> out;
    for (const auto& e : entries)
        if (e.kind == ModeRequest::Kind::pos)
            out.push_back(e.index);
    return out;
}

std::vector<int> ExponentSpec::neg() const
{
    std::vector<int> out;
    for (const auto& e : entries)
        if (e.kind == ModeRequest::Kind::neg)
            out.push_back(e.index);
    return out;
}

bool ExponentSpec::has_collision() const
{
    const auto p = pos();
    for (int s : neg())
        if (std::find(p.begin(), p.end(), s) != p.end())
            return true;
    return false;
}

ExponentSpec make_spec(std::span<const int> pos, std::span<const int> neg)
{
    ExponentSpec out;
    for (int r : pos)
        out.entries.push_back({ModeRequest::Kind::pos, r});
    for (int s : neg)
        out.entries.push_back({ModeRequest::Kind::neg, s});
    return out;
}

ExponentSpec compress(std::span<const ModeRequest> raw)
{
    ExponentSpec out;
    for (const auto& e : raw) {
        if (e.index < 0)
            throw std::domain_error("mode index must be non-negative, got " + std::to_string(e.index));
        if (std::find(out.entries.begin(), out.entries.end(), e) == out.entries.end())
            out.entries.push_back(e);
    }
    return out;
}

namespace {

std::int64_t layers_below(Exp8 order)
{
    return order <= Exp8{0} ? 0 : (order.eighths() + 7) / 8;
}

// Ascending k-subsets of {0,1,...} with the given sum, in lexicographic order.
void distinct_sets(int k, std::int64_t sum, int min_part, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit)
{
    if (k == 0) {
        if (sum == 0)
            emit(cur);
        return;
    }
    for (std::int64_t a = min_part;; ++a) {
        // the remaining k-1 parts are at least a+1, ..., a+k-1
        const std::int64_t least = a * k + static_cast<std::int64_t>(k) * (k - 1) / 2;
        if (least > sum)
            break;
        cur.push_back(static_cast<int>(a));
        distinct_sets(k - 1, sum - a, static_cast<int>(a) + 1, cur, emit);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> sets_with_sum(int k, std::int64_t sum)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    distinct_sets(k, sum, 0, cur, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

// All states of weight exactly w, sorted.
std::vector<FockState> layer(std::int64_t w)
{
    std::vector<FockState> out;
    for (int k = 0; static_cast<std::int64_t>(k) * k <= w; ++k) {
        const std::int64_t base = static_cast<std::int64_t>(k) * (k - 1) / 2;
        const std::int64_t rest = w - k;
        for (std::int64_t a = base; a <= rest - base; ++a) {
            const auto ss = sets_with_sum(k, a);
            const auto ts = sets_with_sum(k, rest - a);
            for (const auto& s : ss)
                for (const auto& t : ts)
                    out.push_back({s, t});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Layers are immutable once built; shared by every trace in the process.
const std::vector<FockState>& cached_layer(std::int64_t w)
{
    static std::mutex mu;
    static std::deque<std::unique_ptr<std::vector<FockState>>> cache;
    {
        std::lock_guard lock(mu);
        if (w < static_cast<std::int64_t>(cache.size()) && cache[static_cast<std::size_t>(w)])
            return *cache[static_cast<std::size_t>(w)];
    }
    auto built = std::make_unique<std::vector<FockState>>(layer(w));
    std::lock_guard lock(mu);
    if (static_cast<std::int64_t>(cache.size()) <= w)
        cache.resize(static_cast<std::size_t>(w + 1));
    auto& slot = cache[static_cast<std::size_t>(w)];
    if (!slot)
        slot = std::move(built);
    return *slot;
}

bool contains(const std::vector<int>& v, int x)
{
    return std::binary_search(v.begin(), v.end(), x);
}

std::int64_t layer_trace(std::int64_t w, const std::vector<int>& pos, const std::vector<int>& neg)
{
    std::int64_t acc = 0;
    for (const auto& st : cached_layer(w)) {
        bool keep = true;
        for (int r : pos)
            keep = keep && contains(st.T, r);
        for (int s : neg)
            keep = keep && !contains(st.S, s);
        acc += keep;
    }
    return acc;
}

}  // namespace

void for_each_state(Exp8 order, const std::function<void(const FockState&)>& visit)
{
    for (std::int64_t w = 0; w < layers_below(order); ++w)
        for (const auto& st : layer(w))
            visit(st);
}

std::vector<FockState> enumerate_states(Exp8 order)
{
    std::vector<FockState> out;
    for_each_state(order, [&](const FockState& s) { out.push_back(s); });
    return out;
}

QSeries state_count_series(Exp8 order)
{
    return raw_trace(ExponentSpec{}, order, 1);
}

QSeries raw_trace(const ExponentSpec& spec, Exp8 order, int shards)
{
    if (shards < 1)
        throw std::invalid_argument("shard count must be positive");
    const std::int64_t layers = layers_below(order);
    const auto pos = spec.pos();
    const auto neg = spec.neg();

    // Each shard owns the layers w = shard (mod shards) and writes only its
    // own slots; the dense vector is then read in weight order.
    std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(layers, 0)));
    auto work = [&](int shard) {
        for (std::int64_t w = shard; w < layers; w += shards)
            counts[static_cast<std::size_t>(w)] = layer_trace(w, pos, neg);
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < shards; ++i)
            pool.emplace_back(work, i);
        for (auto& t : pool)
            t.join();
    }
    std::vector<Integer> c;
    c.reserve(counts.size());
    for (auto x : counts)
        c.emplace_back(static_cast<long>(x));
    return QSeries::from_dense(Exp8{0}, 8, std::move(c), order);
}

QSeries oracle_coefficient(const ExponentSpec& spec, Exp8 order, int shards)
{
    if (order <= Exp8{0})
        return QSeries::zero(order);
    return euler_pochhammer(order) * raw_trace(spec, order, shards);
}

CollisionReport collision_report(int r, Exp8 order)
{
    const int idx[1] = {r};
    const ExponentSpec spec = make_spec(idx, idx);
    return CollisionReport{r, oracle_coefficient(spec, order), ct_zeta(ct_integrand(idx, idx, order)),
                           QSeries::zero(order)};
}

QSeries partition_pair_count(std::span<const int> r, Exp8 order)
{
    if (order <= Exp8{0})
        return QSeries::zero(order);
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] >= r[i - 1])
            throw std::domain_error("partition_pair_count: indices must be strictly decreasing");
    for (int x : r)
        if (x < 0)
            throw std::domain_error("partition_pair_count: negative index");

    const std::int64_t n = static_cast<std::int64_t>(r.size());
    std::int64_t forced = 0;  // sum (r_j + 1/2) in halves
    for (int x : r)
        forced += 2 * x + 1;
    const std::int64_t limit = order.eighths() <= 0 ? 0 : (order.eighths() + 3) / 4;  // halves below order
    const std::int64_t budget = limit - forced;
    if (budget <= 0)
        return QSeries::zero(order);

    // k distinct odd parts weigh at least k^2/2, i.e. k^2 halves.
    std::int64_t kmax = 0;
    while ((kmax + 1) * (kmax + 1) < budget)
        ++kmax;
    const std::int64_t width = 2 * kmax + 1;  // d = l(pi) - l(pi') in [-kmax, kmax]
    auto at = [&](std::vector<Integer>& g, std::int64_t d, std::int64_t h) -> Integer& {
        return g[static_cast<std::size_t>((d + kmax) * budget + h)];
    };

    std::vector<Integer> g(static_cast<std::size_t>(width * budget));
    at(g, 0, 0) = 1;
    for (std::int64_t a = 0; 2 * a + 1 < budget; ++a) {
        const std::int64_t part = 2 * a + 1;  // (2a+1)/2 in halves
        const bool forbidden = std::find(r.begin(), r.end(), a) != r.end();
        std::vector<Integer> next = g;
        for (std::int64_t d = -kmax; d <= kmax; ++d)
            for (std::int64_t h = 0; h < budget; ++h) {
                const Integer& x = at(g, d, h);
                if (sgn(x) == 0)
                    continue;
                if (h + part < budget && d + 1 <= kmax)
                    at(next, d + 1, h + part) += x;  // part in pi
                if (!forbidden) {
                    if (h + part < budget && d - 1 >= -kmax)
                        at(next, d - 1, h + part) += x;  // part in pi'
                    if (h + 2 * part < budget)
                        at(next, d, h + 2 * part) += x;  // in both
                }
            }
        g = std::move(next);
    }

    std::vector<Term> terms;
    if (n <= kmax)
        for (std::int64_t h = 0; h < budget; ++h)
            if (sgn(at(g, n, h)) != 0)
                terms.push_back({Exp8::halves(h + forced), at(g, n, h)});
    return QSeries::from_terms(terms, order);
}

}  // namespace bo::fock
