#include "bo/asymptotics.hpp"

#include <stdexcept>
#include <string>

namespace bo::asym {

namespace {

Rational factorial(int n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational pow(const Rational& x, int k)
{
    Rational out = 1;
    for (int i = 0; i < k; ++i)
        out *= x;
    return out;
}

// Power series coefficients of 1/(e^t + 1) up to t^V.
std::vector<Rational> inverse_exp_plus_one(int V)
{
    std::vector<Rational> d(static_cast<std::size_t>(V + 1));
    for (int k = 0; k <= V; ++k)
        d[static_cast<std::size_t>(k)] = 1 / factorial(k);
    d[0] += 1;  // e^t + 1
    std::vector<Rational> inv(static_cast<std::size_t>(V + 1));
    inv[0] = 1 / d[0];
    for (int k = 1; k <= V; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            acc += d[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -acc / d[0];
    }
    return inv;
}

// Per-slot weight table w[v][l] = E_v * sign^l * x^{v-l} / (l! (v-l)!).
using Table = std::vector<std::vector<Rational>>;

Table slot_weights(const std::vector<Rational>& E, const Rational& x, bool alternate, int vmax)
{
    Table w(static_cast<std::size_t>(vmax + 1));
    for (int v = 0; v <= vmax; ++v) {
        w[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(v + 1));
        for (int l = 0; l <= v; ++l) {
            Rational t = E[static_cast<std::size_t>(v)] * pow(x, v - l) / (factorial(l) * factorial(v - l));
            if (alternate && l % 2)
                t = -t;
            w[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)] = t;
        }
    }
    return w;
}

// Collects all multi-indices with k = v - l/2 <= K through a DP over slots.
AsymExpansion expand(const std::vector<Table>& slots, int K)
{
    const int vmax = 2 * K;
    // acc[v][l]: sum over partial multi-indices of the product of slot weights.
    Table acc(static_cast<std::size_t>(vmax + 1), std::vector<Rational>(static_cast<std::size_t>(vmax + 1)));
    acc[0][0] = 1;
    for (const auto& w : slots) {
        Table next(static_cast<std::size_t>(vmax + 1), std::vector<Rational>(static_cast<std::size_t>(vmax + 1)));
        for (int v = 0; v <= vmax; ++v)
            for (int l = 0; l <= v; ++l) {
                const Rational& a = acc[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)];
                if (sgn(a) == 0)
                    continue;
                for (int dv = 0; v + dv <= vmax; ++dv)
                    for (int dl = 0; dl <= dv; ++dl) {
                        // 2k = 2v - l may not exceed 2K.
                        if (2 * (v + dv) - (l + dl) > 2 * K)
                            continue;
                        next[static_cast<std::size_t>(v + dv)][static_cast<std::size_t>(l + dl)] +=
                            a * w[static_cast<std::size_t>(dv)][static_cast<std::size_t>(dl)];
                    }
            }
        acc = std::move(next);
    }

    AsymExpansion out;
    out.c.assign(static_cast<std::size_t>(K + 1), Rational(0));
    for (int v = 0; v <= vmax; ++v)
        for (int l = 0; l <= v; l += 2) {
            const int k2 = 2 * v - l;
            if (k2 > 2 * K)
                continue;
            // (-1)^v 2^v i^l Gamma((l+1)/2)/sqrt(pi)
            Rational f = gamma_half_ratio(l) * pow(Rational(2), v);
            if ((v + l / 2) % 2)
                f = -f;
            out.c[static_cast<std::size_t>(k2 / 2)] += f * acc[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)];
        }
    const Rational scale = 1 / pow(Rational(2), static_cast<int>(slots.size()));
    for (auto& c : out.c)
        c *= scale;
    return out;
}

Rational half_plus(int r)
{
    return Rational(2 * r + 1, 2);
}

}  // namespace

EulerTable euler_values(int V)
{
    if (V < 0)
        throw std::domain_error("euler_values: negative size");
    const auto inv = inverse_exp_plus_one(V);
    EulerTable t;
    // E_v(0)/v! = 2 [t^v] 1/(e^t+1); E_v(1)/v! = 2 [t^v] e^t/(e^t+1).
    for (int v = 0; v <= V; ++v) {
        Rational at1 = 0;
        for (int j = 0; j <= v; ++j)
            at1 += inv[static_cast<std::size_t>(j)] / factorial(v - j);
        t.at_zero.push_back(2 * inv[static_cast<std::size_t>(v)] * factorial(v));
        t.at_one.push_back(2 * at1 * factorial(v));
    }
    for (int v = 0; v <= V; ++v) {
        const Rational& a = t.at_one[static_cast<std::size_t>(v)];
        const Rational& b = t.at_zero[static_cast<std::size_t>(v)];
        if (a != (v % 2 ? -b : b) || a + b != (v == 0 ? 2 : 0))
            throw std::logic_error("Euler table identity fails at index " + std::to_string(v));
    }
    return t;
}

std::vector<Rational> euler_by_recurrence(int V, const Rational& x)
{
    std::vector<Rational> E;
    for (int n = 0; n <= V; ++n) {
        Rational acc = 0;
        Integer binom = 1;
        for (int k = 0; k < n; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            acc += Rational(binom) * E[static_cast<std::size_t>(k)];
        }
        E.push_back(pow(x, n) - acc / 2);
    }
    return E;
}

Rational gamma_half_ratio(int l)
{
    if (l < 0 || l % 2)
        throw std::domain_error("gamma_half_ratio: needs an even non-negative argument, got " + std::to_string(l));
    Rational out = 1;
    for (int i = 1; i <= l / 2; ++i)
        out *= Rational(2 * i - 1, 2);
    return out;
}

AsymExpansion asym_F(const std::vector<int>& r, int K)
{
    if (K < 0)
        throw std::domain_error("asym_F: negative order");
    forms::CoeffQuery{r, {}}.validate();
    const EulerTable E = euler_values(2 * K);
    std::vector<Table> slots;
    for (int x : r)
        slots.push_back(slot_weights(E.at_one, half_plus(x), false, 2 * K));
    return expand(slots, K);
}

AsymExpansion asym_G(const forms::CoeffQuery& q, int K)
{
    if (K < 0)
        throw std::domain_error("asym_G: negative order");
    q.validate();
    const EulerTable E = euler_values(2 * K);
    std::vector<Table> slots;
    for (int x : q.pos)
        slots.push_back(slot_weights(E.at_one, half_plus(x), true, 2 * K));
    for (int x : q.neg)
        slots.push_back(slot_weights(E.at_zero, half_plus(x), false, 2 * K));
    return expand(slots, K);
}

Rational first_order_c1_F(const std::vector<int>& r)
{
    const int n = static_cast<int>(r.size());
    Rational s = 0;
    for (int x : r)
        s += x;
    return -(s + Rational(n * (n + 1)) / 4) / pow(Rational(2), n);
}

Rational first_order_c1_G(const forms::CoeffQuery& q)
{
    const int n = q.n();
    Rational s = q.m();
    for (int x : q.pos)
        s += x;
    for (int x : q.neg)
        s -= x;
    return -(s + Rational(n * (n - 3)) / 4) / pow(Rational(2), n);
}

}  // namespace bo::asym
