#pragma once

#include "disc/geometry.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>

namespace disc {

/// For continuous discrepancy: excess = more points than volume (closed
/// witness), deficit = more volume than points (open witness). For red-blue
/// discrepancy: excess = blue majority, deficit = red majority.
enum class Side { excess, deficit };

inline const char* to_string(Side s) { return s == Side::excess ? "excess" : "deficit"; }

using BoxWitness = std::variant<Box, AnchoredBox>;
using RangeWitness = std::variant<std::monostate, Box, HalfSpace>;

struct DiscrepancyReport {
    Rational value;
    BoxWitness witness;
    Side side = Side::excess;
    std::uint64_t candidates_evaluated = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct EmptyBoxReport {
    Rational volume;
    BoxWitness witness;
    std::uint64_t candidates_evaluated = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct BichromaticReport {
    std::uint64_t value = 0;
    RangeWitness witness;
    bool feasible = false;
    std::uint64_t candidates_evaluated = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct NetReport {
    bool is_net = true;
    std::uint64_t threshold = 0; // ceil(eps * W)
    std::optional<RangeWitness> violator;
};

inline std::string to_string(const BoxWitness& w)
{
    return std::visit([](const auto& b) { return to_string(b); }, w);
}

inline std::string to_string(const RangeWitness& w)
{
    if (std::holds_alternative<Box>(w))
        return to_string(std::get<Box>(w));
    if (std::holds_alternative<HalfSpace>(w))
        return to_string(std::get<HalfSpace>(w));
    return "none";
}

} // namespace disc
