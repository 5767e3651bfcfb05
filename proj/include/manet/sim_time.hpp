#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace manet {

// Virtual time in integer microseconds. Integer so that event ordering is
// identical on every platform (bit-exact replay).
struct SimTime {
    std::int64_t us = 0;

    static constexpr SimTime micros(std::int64_t v) { return SimTime{v}; }
    static constexpr SimTime millis(std::int64_t v) { return SimTime{v * 1000}; }
    static SimTime seconds(double s) {
        return SimTime{static_cast<std::int64_t>(std::llround(s * 1e6))};
    }

    double to_seconds() const { return static_cast<double>(us) * 1e-6; }
    double to_millis() const { return static_cast<double>(us) * 1e-3; }

    constexpr auto operator<=>(const SimTime&) const = default;
    constexpr SimTime operator+(SimTime o) const { return SimTime{us + o.us}; }
    constexpr SimTime operator-(SimTime o) const { return SimTime{us - o.us}; }
    SimTime& operator+=(SimTime o) {
        us += o.us;
        return *this;
    }
};

}  // namespace manet
