#pragma once

#include <cstdint>
#include <string>

namespace curvegraph {

// Exact half-integer arithmetic. Stores the doubled value as an integer so that
// nlm and mu never touch floating point. Value = doubled / 2.
struct HalfInt {
    std::int64_t doubled = 0;

    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt{d}; }
    static constexpr HalfInt whole(std::int64_t n) { return HalfInt{2 * n}; }
    static constexpr HalfInt half(std::int64_t n) { return HalfInt{n}; }  // n halves

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{doubled + o.doubled}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{doubled - o.doubled}; }
    constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
    HalfInt& operator+=(HalfInt o) { doubled += o.doubled; return *this; }
    HalfInt& operator-=(HalfInt o) { doubled -= o.doubled; return *this; }

    constexpr bool operator==(const HalfInt&) const = default;
    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt pos() const { return HalfInt{doubled > 0 ? doubled : 0}; }
    constexpr HalfInt abs() const { return HalfInt{doubled < 0 ? -doubled : doubled}; }
    constexpr bool is_integer() const { return doubled % 2 == 0; }

    double value() const { return static_cast<double>(doubled) / 2.0; }

    // "2", "-1", "5/2", ...
    std::string str() const {
        if (doubled % 2 == 0) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }

private:
    explicit constexpr HalfInt(std::int64_t d) : doubled(d) {}
};

}  // namespace curvegraph
