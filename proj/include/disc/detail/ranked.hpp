#pragma once

// Points re-expressed as per-dimension ranks on a critical grid. Containment
// against grid-aligned faces then reduces to integer comparisons.

#include "disc/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace disc::detail {

struct RankedSet {
    std::size_t dim = 0;
    std::size_t count = 0;
    CriticalGrid grid;
    std::vector<std::uint32_t> ranks; // point-major
    std::vector<std::uint64_t> weights;
    std::vector<Color> colors;

    std::uint32_t rank(std::size_t i, std::size_t j) const { return ranks[i * dim + j]; }
    const Rational& value(std::size_t j, std::uint32_t r) const { return grid.axes[j][r]; }
};

inline RankedSet rank_points(const PointSet& ps, bool with_zero, bool with_one)
{
    RankedSet rs;
    rs.dim = ps.dim();
    rs.count = ps.size();
    rs.grid = critical_grid(ps, with_zero, with_one);
    rs.ranks.resize(rs.count * rs.dim);
    for (std::size_t i = 0; i < rs.count; ++i) {
        for (std::size_t j = 0; j < rs.dim; ++j)
            rs.ranks[i * rs.dim + j] = static_cast<std::uint32_t>(rs.grid.index(j, ps[i].coords[j]));
        rs.weights.push_back(ps[i].weight);
        rs.colors.push_back(ps[i].color);
    }
    return rs;
}

/// Distinct ranks in dimension j over a subset, ascending.
inline void distinct_ranks(const RankedSet& rs, const std::vector<std::uint32_t>& subset, std::size_t j,
                           std::vector<std::uint32_t>& out)
{
    out.clear();
    for (auto i : subset)
        out.push_back(rs.rank(i, j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

inline void require_unit_cube(const PointSet& ps)
{
    if (!ps.inside_unit_cube())
        throw std::invalid_argument("coordinates must lie in [0,1]");
}

} // namespace disc::detail
