#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bo {

// Exponent of q measured in units of 1/8.
//
// Theta coefficients need q^{(2l+1)^2/8}; every other series in the library
// lives on the half-integer sub-grid (multiples of 4 here) or on the integers
// (multiples of 8).
class Exp8 {
public:
    constexpr Exp8() = default;
    constexpr explicit Exp8(std::int64_t eighths) : v_(eighths) {}

    static constexpr Exp8 integer(std::int64_t n) { return Exp8{8 * n}; }
    static constexpr Exp8 halves(std::int64_t h) { return Exp8{4 * h}; }

    constexpr std::int64_t eighths() const { return v_; }
    constexpr bool is_integer() const { return v_ % 8 == 0; }
    constexpr bool is_half_integer() const { return v_ % 4 == 0; }

    // Throws std::domain_error when the exponent is not on the half grid.
    std::int64_t to_halves() const;
    // Largest integer <= value.
    std::int64_t floor_integer() const;
    double to_double() const { return static_cast<double>(v_) / 8.0; }

    // Reduced fraction: "3", "-7/2", "9/8".
    std::string to_string() const;
    // Accepts "3", "-7/2", "9/8"; the denominator must divide 8.
    static Exp8 parse(std::string_view text);

    constexpr auto operator<=>(const Exp8&) const = default;

    constexpr Exp8 operator-() const { return Exp8{-v_}; }
    constexpr Exp8& operator+=(Exp8 o) { v_ += o.v_; return *this; }
    constexpr Exp8& operator-=(Exp8 o) { v_ -= o.v_; return *this; }
    friend constexpr Exp8 operator+(Exp8 a, Exp8 b) { return Exp8{a.v_ + b.v_}; }
    friend constexpr Exp8 operator-(Exp8 a, Exp8 b) { return Exp8{a.v_ - b.v_}; }
    friend constexpr Exp8 operator*(std::int64_t k, Exp8 a) { return Exp8{k * a.v_}; }

private:
    std::int64_t v_ = 0;
};

}  // namespace bo
