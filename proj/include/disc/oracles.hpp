#pragma once

// Brute-force reference implementations used by tests and the acceptance
// suite. Nothing here shares enumeration code with the solvers: boxes are
// enumerated over the full Cartesian product of grid intervals, membership is
// re-tested from scratch, and linear feasibility uses Fourier-Motzkin
// elimination instead of the simplex method.

#include "disc/geometry.hpp"
#include "disc/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace disc::oracle {

inline bool has_clique(const Graph& g, int k)
{
    if (k < 1 || k > g.n())
        throw std::invalid_argument("clique size out of range");
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<bool(int, int)> grow = [&](int depth, int start) {
        if (depth == k)
            return true;
        for (int v = start; v <= g.n(); ++v) {
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                ok = g.has_edge(pick[static_cast<std::size_t>(d)], v);
            if (!ok)
                continue;
            pick[static_cast<std::size_t>(depth)] = v;
            if (grow(depth + 1, v + 1))
                return true;
        }
        return false;
    };
    return grow(0, 1);
}

/// True iff the system sum_j coef_j * y_j <= rhs has a real solution, decided
/// by eliminating variables one at a time.
inline bool fourier_motzkin_feasible(std::vector<std::pair<std::vector<Rational>, Rational>> system, std::size_t vars)
{
    for (std::size_t x = 0; x < vars; ++x) {
        std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg, rest;
        for (auto& row : system) {
            int s = row.first[x].sign();
            (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(row));
        }
        // Normalised rows deduplicate through a set to curb growth.
        std::set<std::pair<std::vector<Rational>, Rational>> next(rest.begin(), rest.end());
        for (const auto& p : pos)
            for (const auto& q : neg) {
                const Rational& a = p.first[x];
                Rational b = -q.first[x];
                std::vector<Rational> coef(vars);
                for (std::size_t j = 0; j < vars; ++j)
                    coef[j] = b * p.first[j] + a * q.first[j];
                Rational rhs = b * p.second + a * q.second;
                Rational scale;
                for (const auto& c : coef)
                    if (c.sign() != 0) {
                        scale = abs(c);
                        break;
                    }
                if (scale.sign() != 0) {
                    for (auto& c : coef)
                        c /= scale;
                    rhs /= scale;
                }
                next.emplace(std::move(coef), std::move(rhs));
            }
        system.assign(next.begin(), next.end());
    }
    return std::all_of(system.begin(), system.end(), [](const auto& row) { return row.second.sign() >= 0; });
}

/// True iff some closed half-space contains every blue point and no red one.
inline bool separable_subset(const std::vector<Point>& blues, const std::vector<Point>& reds)
{
    std::size_t dim = 0;
    for (const auto& p : blues)
        dim = std::max(dim, p.size());
    for (const auto& p : reds)
        dim = std::max(dim, p.size());
    for (const auto& p : blues)
        if (p.size() != dim)
            throw std::invalid_argument("dimension mismatch");
    for (const auto& p : reds)
        if (p.size() != dim)
            throw std::invalid_argument("dimension mismatch");
    // Unknowns (a, c): a.b - c <= 0 for blues, c - a.r <= -1 for reds.
    std::vector<std::pair<std::vector<Rational>, Rational>> system;
    for (const auto& b : blues) {
        std::vector<Rational> coef(b.begin(), b.end());
        coef.emplace_back(-1);
        system.emplace_back(std::move(coef), Rational(0));
    }
    for (const auto& r : reds) {
        std::vector<Rational> coef;
        for (const auto& x : r)
            coef.push_back(-x);
        coef.emplace_back(1);
        system.emplace_back(std::move(coef), Rational(-1));
    }
    return fourier_motzkin_feasible(std::move(system), dim + 1);
}

enum class RangeProblem {
    star_discrepancy,
    box_discrepancy,
    max_empty_star,
    max_empty_box,
    bichromatic_box,
    bichromatic_anchored_box,
    redblue_discrepancy,
};

inline bool anchored(RangeProblem p)
{
    return p == RangeProblem::star_discrepancy || p == RangeProblem::max_empty_star ||
           p == RangeProblem::bichromatic_anchored_box;
}

/// Exact optimum by enumerating every grid box [a, b] with a <= b drawn from
/// the point coordinates together with 0 and 1 (a = 0 for anchored problems),
/// in both closures, counting each box from scratch.
inline Rational naive_range_enumerate(const PointSet& ps, RangeProblem problem)
{
    const std::size_t d = ps.dim();
    const bool is_anchored = anchored(problem);
    if (is_anchored ? (ps.size() > 20 || d > 4) : (ps.size() > 12 || d > 3))
        throw std::length_error("instance above the naive oracle's size limit");

    std::vector<std::vector<Rational>> values(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::set<Rational> s{Rational(0), Rational(1)};
        for (const auto& p : ps)
            s.insert(p.coords[j]);
        values[j].assign(s.begin(), s.end());
    }
    // Every interval per dimension, with the points it holds in each closure.
    struct Interval {
        Rational length;
        std::uint32_t closed_mask = 0;
        std::uint32_t open_mask = 0;
    };
    std::vector<std::vector<Interval>> intervals(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t a = 0; a < values[j].size(); ++a) {
            if (is_anchored && values[j][a].sign() != 0)
                continue;
            for (std::size_t b = a; b < values[j].size(); ++b) {
                const Rational& lo = values[j][a];
                const Rational& hi = values[j][b];
                Interval iv{hi - lo};
                for (std::size_t i = 0; i < ps.size(); ++i) {
                    const auto& x = ps[i].coords[j];
                    if (lo <= x && x <= hi)
                        iv.closed_mask |= 1U << i;
                    if (is_anchored ? (lo <= x && x < hi) : (lo < x && x < hi))
                        iv.open_mask |= 1U << i;
                }
                intervals[j].push_back(std::move(iv));
            }
        }

    const Rational total(ps.total_weight());
    Rational best(0);
    bool found = false;
    auto consider = [&](const Rational& v) {
        if (!found || v > best) {
            best = v;
            found = true;
        }
    };

    std::vector<std::size_t> odo(d, 0);
    for (;;) {
        Rational vol(1);
        std::uint32_t closed_in = ~0U, open_in = ~0U;
        for (std::size_t j = 0; j < d; ++j) {
            const auto& iv = intervals[j][odo[j]];
            vol *= iv.length;
            closed_in &= iv.closed_mask;
            open_in &= iv.open_mask;
        }
        for (bool closed : {true, false}) {
            const std::uint32_t in = closed ? closed_in : open_in;
            std::uint64_t red = 0, blue = 0, all = 0;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                if (!(in >> i & 1U))
                    continue;
                all += ps[i].weight;
                if (ps[i].color == Color::red)
                    red += ps[i].weight;
                if (ps[i].color == Color::blue)
                    blue += ps[i].weight;
            }
            switch (problem) {
            case RangeProblem::star_discrepancy:
            case RangeProblem::box_discrepancy: consider(abs(vol - Rational(all) / total)); break;
            case RangeProblem::max_empty_star:
            case RangeProblem::max_empty_box:
                if (!closed && all == 0)
                    consider(vol);
                break;
            case RangeProblem::bichromatic_box:
            case RangeProblem::bichromatic_anchored_box:
                if (closed && red == 0)
                    consider(Rational(blue));
                break;
            case RangeProblem::redblue_discrepancy:
                if (closed)
                    consider(abs(Rational(red) - Rational(blue)));
                break;
            }
        }
        std::size_t j = 0;
        while (j < d && ++odo[j] == intervals[j].size())
            odo[j++] = 0;
        if (j == d)
            break;
    }
    return best;
}

} // namespace disc::oracle
