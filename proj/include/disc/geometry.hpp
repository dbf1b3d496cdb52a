#pragma once

// Points, weighted colored point sets, range witnesses and the exact counting
// primitives shared by solvers, gadgets and tests.

#include "disc/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disc {

using Point = std::vector<Rational>;

enum class Color { none, red, blue };
enum class Closure { open, closed };

inline const char* to_string(Color c)
{
    switch (c) {
    case Color::red: return "red";
    case Color::blue: return "blue";
    default: return "none";
    }
}

inline const char* to_string(Closure c) { return c == Closure::open ? "open" : "closed"; }

struct WeightedPoint {
    Point coords;
    Color color = Color::none;
    std::uint64_t weight = 1;
};

/// A weight-w point behaves exactly like w coincident copies.
class PointSet {
public:
    explicit PointSet(std::size_t dim) : dim_(dim)
    {
        if (dim == 0)
            throw std::invalid_argument("dimension must be positive");
    }

    void add(Point coords, Color color = Color::none, std::uint64_t weight = 1)
    {
        if (coords.size() != dim_)
            throw std::invalid_argument("point dimension " + std::to_string(coords.size()) +
                                        " does not match set dimension " + std::to_string(dim_));
        if (weight == 0)
            throw std::invalid_argument("point weight must be at least 1");
        points_.push_back({std::move(coords), color, weight});
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const WeightedPoint& operator[](std::size_t i) const { return points_[i]; }
    WeightedPoint& operator[](std::size_t i) { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    std::uint64_t total_weight() const
    {
        std::uint64_t w = 0;
        for (const auto& p : points_)
            w += p.weight;
        return w;
    }

    std::uint64_t weight_of(Color c) const
    {
        std::uint64_t w = 0;
        for (const auto& p : points_)
            if (p.color == c)
                w += p.weight;
        return w;
    }

    bool fully_colored() const
    {
        return std::none_of(points_.begin(), points_.end(), [](const auto& p) { return p.color == Color::none; });
    }

    bool inside_unit_cube() const
    {
        for (const auto& p : points_)
            for (const auto& x : p.coords)
                if (x.sign() < 0 || x > Rational(1))
                    return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<WeightedPoint> points_;
};

/// [0, upper) when open, [0, upper] when closed. The lower face at 0 is
/// always inclusive, so the origin lies in every anchored box of positive extent.
struct AnchoredBox {
    Point upper;
    Closure closure = Closure::closed;

    friend bool operator==(const AnchoredBox&, const AnchoredBox&) = default;
};

/// (lower, upper) when open, [lower, upper] when closed. Degenerate boxes are legal.
struct Box {
    Point lower;
    Point upper;
    Closure closure = Closure::closed;

    friend bool operator==(const Box&, const Box&) = default;
};

/// The closed set {x : normal . x <= offset}.
struct HalfSpace {
    std::vector<Rational> normal;
    Rational offset;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

struct ColorCounts {
    std::uint64_t red = 0;
    std::uint64_t blue = 0;
    std::uint64_t none = 0;

    std::uint64_t total() const { return red + blue + none; }

    void add(Color c, std::uint64_t w)
    {
        switch (c) {
        case Color::red: red += w; break;
        case Color::blue: blue += w; break;
        default: none += w; break;
        }
    }

    friend bool operator==(const ColorCounts&, const ColorCounts&) = default;
};

struct HalfSpaceCounts {
    ColorCounts inside;   // normal . p < offset
    ColorCounts boundary; // normal . p == offset
    ColorCounts outside;  // normal . p > offset
};

/// Per-dimension sorted distinct coordinates, optionally with 0 and 1 added.
struct CriticalGrid {
    std::vector<std::vector<Rational>> axes;

    std::size_t dim() const { return axes.size(); }

    /// Product of axis sizes, the number of anchored corners.
    std::uint64_t corner_count() const
    {
        std::uint64_t c = 1;
        for (const auto& a : axes)
            c *= a.size();
        return c;
    }

    /// Index of value on axis j; value must be present.
    std::size_t index(std::size_t j, const Rational& value) const
    {
        const auto& a = axes[j];
        auto it = std::lower_bound(a.begin(), a.end(), value);
        if (it == a.end() || *it != value)
            throw std::out_of_range("value not on critical grid");
        return static_cast<std::size_t>(it - a.begin());
    }
};

inline CriticalGrid critical_grid(const PointSet& ps, bool with_zero, bool with_one)
{
    if (ps.empty())
        throw std::invalid_argument("empty point set");
    CriticalGrid g;
    g.axes.resize(ps.dim());
    for (std::size_t j = 0; j < ps.dim(); ++j) {
        auto& axis = g.axes[j];
        axis.reserve(ps.size() + 2);
        for (const auto& p : ps)
            axis.push_back(p.coords[j]);
        if (with_zero)
            axis.emplace_back(0);
        if (with_one)
            axis.emplace_back(1);
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    return g;
}

inline bool contains(const AnchoredBox& box, const Point& p)
{
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].sign() < 0)
            return false;
        if (box.closure == Closure::closed ? p[j] > box.upper[j] : p[j] >= box.upper[j])
            return false;
    }
    return true;
}

inline bool contains(const Box& box, const Point& p)
{
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (box.closure == Closure::closed) {
            if (p[j] < box.lower[j] || p[j] > box.upper[j])
                return false;
        } else if (p[j] <= box.lower[j] || p[j] >= box.upper[j]) {
            return false;
        }
    }
    return true;
}

template <class Range>
ColorCounts count_in_box(const PointSet& ps, const Range& box)
{
    const std::size_t box_dim = [&] {
        if constexpr (std::is_same_v<Range, Box>) {
            if (box.lower.size() != box.upper.size())
                throw std::invalid_argument("box corners differ in dimension");
        }
        return box.upper.size();
    }();
    if (box_dim != ps.dim())
        throw std::invalid_argument("box dimension does not match point set dimension");
    ColorCounts c;
    for (const auto& p : ps)
        if (contains(box, p.coords))
            c.add(p.color, p.weight);
    return c;
}

inline Rational box_volume(const AnchoredBox& box)
{
    Rational v(1);
    for (const auto& x : box.upper)
        v *= x;
    return v;
}

inline Rational box_volume(const Box& box)
{
    Rational v(1);
    for (std::size_t j = 0; j < box.upper.size(); ++j)
        v *= box.upper[j] - box.lower[j];
    return v;
}

inline Rational dot(const std::vector<Rational>& a, const Point& p)
{
    Rational s;
    for (std::size_t j = 0; j < a.size(); ++j)
        s += a[j] * p[j];
    return s;
}

inline HalfSpaceCounts halfspace_counts(const PointSet& ps, const HalfSpace& hs)
{
    if (hs.normal.size() != ps.dim())
        throw std::invalid_argument("half-space dimension does not match point set dimension");
    HalfSpaceCounts c;
    for (const auto& p : ps) {
        auto side = dot(hs.normal, p.coords) <=> hs.offset;
        if (side < 0)
            c.inside.add(p.color, p.weight);
        else if (side == 0)
            c.boundary.add(p.color, p.weight);
        else
            c.outside.add(p.color, p.weight);
    }
    return c;
}

inline std::string to_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j)
            s += ", ";
        s += p[j].str();
    }
    return s + ")";
}

inline std::string to_string(const AnchoredBox& b)
{
    return std::string("[0, ") + to_string(b.upper) + (b.closure == Closure::closed ? "]" : ")");
}

inline std::string to_string(const Box& b)
{
    const bool closed = b.closure == Closure::closed;
    return std::string(closed ? "[" : "(") + to_string(b.lower) + ", " + to_string(b.upper) + (closed ? "]" : ")");
}

inline std::string to_string(const HalfSpace& h)
{
    std::string s;
    for (std::size_t j = 0; j < h.normal.size(); ++j) {
        if (j)
            s += " + ";
        s += h.normal[j].str() + "*x" + std::to_string(j + 1);
    }
    return s + " <= " + h.offset.str();
}

} // namespace disc
