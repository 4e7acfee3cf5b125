#include "bo/exp8.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bo {

std::int64_t Exp8::to_halves() const
{
    if (!is_half_integer())
        throw std::domain_error("exponent " + to_string() + " is not a half-integer");
    return v_ / 4;
}

std::int64_t Exp8::floor_integer() const
{
    std::int64_t q = v_ / 8;
    if (v_ % 8 != 0 && v_ < 0)
        --q;
    return q;
}

std::string Exp8::to_string() const
{
    const std::int64_t g = std::gcd(v_, std::int64_t{8});
    const std::int64_t num = v_ / g;
    const std::int64_t den = 8 / g;
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s)
{
    std::int64_t out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed exponent '" + std::string(s) + "'");
    return out;
}

}  // namespace

Exp8 Exp8::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Exp8::integer(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den <= 0 || 8 % den != 0)
        throw std::invalid_argument("exponent denominator must divide 8: '" + std::string(text) + "'");
    return Exp8{num * (8 / den)};
}

}  // namespace bo
