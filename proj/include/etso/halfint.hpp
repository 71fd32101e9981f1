#pragma once

#include "etso/exact.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace etso {

// Integer or half-odd-integer quantum number, stored as twice its value.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt from_int(int v) { return HalfInt{2 * v}; }
    // Accepts "3/2", "-1/2", "2"; any other denominator is rejected.
    static HalfInt parse(std::string_view text);

    constexpr bool is_integer() const { return twice % 2 == 0; }
    int as_int() const;
    double value() const { return twice / 2.0; }
    Rational rational() const { return Rational(twice, 2); }
    std::string str() const;

    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator+(HalfInt a, int b) { return HalfInt{a.twice + 2 * b}; }
    friend constexpr HalfInt operator-(HalfInt a, int b) { return HalfInt{a.twice - 2 * b}; }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;
};

constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

}  // namespace etso
