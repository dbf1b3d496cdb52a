#pragma once

// Shared helpers for the test binaries: literal parsing and seeded generators.

#include "disc/disc.hpp"

#include <random>

namespace testing_support {

using namespace disc;

inline Rational R(const char* s) { return Rational::parse(s); }

inline Point P(std::initializer_list<const char*> xs)
{
    Point p;
    for (auto x : xs)
        p.push_back(R(x));
    return p;
}

inline Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// p/q with 1 <= q <= max_den and 0 <= p <= q.
    Rational unit_rational(long max_den)
    {
        const long q = integer(1, max_den);
        return Rational::make(integer(0, q), q);
    }

    Rational signed_rational(long max_abs, long max_den)
    {
        return Rational::make(integer(-max_abs, max_abs), integer(1, max_den));
    }

    /// Points in [0,1]^d, coloured at random with at least one blue and one red
    /// whenever n >= 2, weights in [1, max_weight].
    PointSet colored_points(std::size_t d, std::size_t n, long max_den, long max_weight = 1)
    {
        PointSet ps(d);
        for (std::size_t i = 0; i < n; ++i) {
            Point p;
            for (std::size_t j = 0; j < d; ++j)
                p.push_back(unit_rational(max_den));
            Color c = i == 0 ? Color::blue : i == 1 ? Color::red : (coin() ? Color::blue : Color::red);
            ps.add(std::move(p), c, static_cast<std::uint64_t>(integer(1, max_weight)));
        }
        return ps;
    }

    Graph graph(int n, double density)
    {
        Graph g(n);
        std::bernoulli_distribution edge(density);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (edge(rng_))
                    g.add_edge(u, v);
        return g;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Graph empty_graph(int n) { return Graph(n); }

/// Largest count/N - vol over closed anchored boxes at critical corners
/// (grid with 1 added), enumerated corner by corner.
inline Rational max_closed_excess(const PointSet& ps)
{
    const auto grid = critical_grid(ps, false, true);
    const Rational total(ps.total_weight());
    std::vector<std::size_t> odo(ps.dim(), 0);
    Rational best(-1);
    for (;;) {
        Point corner;
        for (std::size_t j = 0; j < ps.dim(); ++j)
            corner.push_back(grid.axes[j][odo[j]]);
        AnchoredBox b{corner, Closure::closed};
        best = std::max(best, Rational(count_in_box(ps, b).total()) / total - box_volume(b));
        std::size_t j = 0;
        while (j < ps.dim() && ++odo[j] == grid.axes[j].size())
            odo[j++] = 0;
        if (j == ps.dim())
            return best;
    }
}

/// Per plane of an empty-star construction: every open anchored rectangle
/// that holds no staircase point of the plane and misses every region
/// F(u) = [C mu^(u-2), C mu^(u-1)] x [mu^-u, mu^-(u-1)], u = 1..n, has area at
/// most C / mu. Returns the largest such area over all planes.
inline Rational largest_region_free_area(const PointSet& staircase, int k, int n, const Rational& mu)
{
    const Rational C = reciprocal(rat_pow(mu, n - 1));
    auto mpow = [&](long e) { return e >= 0 ? rat_pow(mu, e) : reciprocal(rat_pow(mu, -e)); };
    Rational best(0);
    for (int plane = 0; plane < k; ++plane) {
        const auto jx = static_cast<std::size_t>(2 * plane), jy = jx + 1;
        std::vector<Point> in_plane;
        std::set<Rational> xs{Rational(1)}, ys{Rational(1)};
        for (const auto& p : staircase) {
            xs.insert(p.coords[jx]);
            ys.insert(p.coords[jy]);
            bool only_here = true;
            for (std::size_t j = 0; j < p.coords.size(); ++j)
                if (j != jx && j != jy && p.coords[j].sign() != 0)
                    only_here = false;
            if (only_here)
                in_plane.push_back({p.coords[jx], p.coords[jy]});
        }
        for (const auto& x : xs)
            for (const auto& y : ys) {
                bool feasible = true;
                for (const auto& q : in_plane)
                    if (q[0] < x && q[1] < y)
                        feasible = false;
                for (long u = 1; u <= n && feasible; ++u)
                    if (x > C * mpow(u - 2) && y > mpow(-u))
                        feasible = false;
                if (feasible)
                    best = std::max(best, x * y);
            }
    }
    return best;
}

struct LiftingCheck {
    std::uint64_t boxes = 0;
    std::uint64_t violations = 0;
};

/// For every grid box (both closures) of volume >= 2/3 over the lifted set:
/// a lifted point lies in the box iff the original point's non-zero
/// coordinates lie in the box's projection onto those dimensions.
inline LiftingCheck check_lifting(const PointSet& original, const PointSet& lifted)
{
    LiftingCheck out;
    const std::size_t d = lifted.dim();
    const auto grid = critical_grid(lifted, true, true);
    const Rational two_thirds = Rational::make(2, 3);
    std::vector<std::vector<std::pair<Rational, Rational>>> sides(d);
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& a : grid.axes[j])
            for (const auto& b : grid.axes[j])
                if (b - a >= two_thirds)
                    sides[j].emplace_back(a, b);
    std::vector<std::size_t> odo(d, 0);
    for (;;) {
        Box box;
        Rational vol(1);
        for (std::size_t j = 0; j < d; ++j) {
            box.lower.push_back(sides[j][odo[j]].first);
            box.upper.push_back(sides[j][odo[j]].second);
            vol *= box.upper[j] - box.lower[j];
        }
        if (vol >= two_thirds)
            for (auto cl : {Closure::open, Closure::closed}) {
                box.closure = cl;
                ++out.boxes;
                for (std::size_t i = 0; i < original.size(); ++i) {
                    Box proj{{}, {}, cl};
                    Point x;
                    for (std::size_t j = 0; j < d; ++j)
                        if (original[i].coords[j].sign() != 0) {
                            proj.lower.push_back(box.lower[j]);
                            proj.upper.push_back(box.upper[j]);
                            x.push_back(original[i].coords[j]);
                        }
                    if (contains(box, lifted[i].coords) != contains(proj, x))
                        ++out.violations;
                }
            }
        std::size_t j = 0;
        while (j < d && ++odo[j] == sides[j].size())
            odo[j++] = 0;
        if (j == d)
            return out;
    }
}

} // namespace testing_support
