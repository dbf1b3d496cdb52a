#pragma once

// Red-free closed half-spaces and epsilon-net verification.
//
// A closed half-space holding a blue set B and no red point exists iff the
// system a.b <= c (b in B), a.r >= c + 1 (r red) is feasible: strict
// separation of finite sets can always be rescaled to margin 1. Every
// candidate blue set is tried, so no hyperplane-enumeration shortcut is needed.

#include "disc/combinatorial.hpp"
#include "disc/lp.hpp"

#include <numeric>

namespace disc {

/// Finds a closed half-space containing every blue point given and none of the
/// reds, or nullopt if none exists.
inline std::optional<HalfSpace> separating_halfspace(const std::vector<Point>& blues, const std::vector<Point>& reds,
                                                     std::size_t dim)
{
    Matrix rows;
    std::vector<Rational> rhs;
    for (const auto& b : blues) {
        auto row = b;
        row.emplace_back(-1);
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    for (const auto& r : reds) {
        std::vector<Rational> row;
        for (const auto& x : r)
            row.push_back(-x);
        row.emplace_back(1);
        rows.push_back(std::move(row));
        rhs.emplace_back(-1);
    }
    auto y = feasible_point(rows, rhs, dim + 1);
    if (!y)
        return std::nullopt;
    HalfSpace h;
    h.normal.assign(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(dim));
    h.offset = (*y)[dim];
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return x.sign() == 0; })) {
        // a = 0 only arises without reds (whole space) or without blues (empty set).
        std::vector<Point> all = blues;
        all.insert(all.end(), reds.begin(), reds.end());
        h.normal.assign(dim, Rational(0));
        h.normal[0] = Rational(1);
        if (all.empty()) {
            h.offset = Rational(0);
            return h;
        }
        Rational lo = all[0][0], hi = all[0][0];
        for (const auto& p : all) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        h.offset = h.offset.sign() >= 0 ? hi : lo - Rational(1);
    }
    return h;
}

/// Decides whether some closed half-space holds blue weight >= m and no red
/// weight. Blue subsets are tried by increasing size in lexicographic order;
/// subsets of a separable set are separable, so subsets of at most m points
/// suffice. The witness is the first separable subset's half-space.
inline BichromaticReport solve_bichromatic_halfspace(const PointSet& ps, std::uint64_t m)
{
    detail::Stopwatch<> clock;
    detail::require_colored(ps);
    std::vector<std::size_t> blue_idx;
    std::vector<Point> reds;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].color == Color::blue)
            blue_idx.push_back(i);
        else
            reds.push_back(ps[i].coords);
    }
    BichromaticReport r;
    auto finish = [&](const HalfSpace& h) {
        auto c = halfspace_counts(ps, h);
        r.feasible = true;
        r.value = c.inside.blue + c.boundary.blue;
        r.witness = h;
        r.elapsed = clock.elapsed();
        return r;
    };
    if (m == 0) {
        if (auto h = separating_halfspace({}, reds, ps.dim()))
            return finish(*h);
    }
    if (ps.weight_of(Color::blue) < m) {
        r.elapsed = clock.elapsed();
        return r;
    }
    const std::size_t nb = blue_idx.size();
    for (std::size_t size = 1; size <= std::min<std::uint64_t>(m, nb); ++size) {
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::uint64_t w = 0;
            for (auto p : pick)
                w += ps[blue_idx[p]].weight;
            if (w >= m) {
                ++r.candidates_evaluated;
                std::vector<Point> blues;
                for (auto p : pick)
                    blues.push_back(ps[blue_idx[p]].coords);
                if (auto h = separating_halfspace(blues, reds, ps.dim()))
                    return finish(*h);
            }
            // Next combination in lexicographic order.
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == nb - size + k - 1)
                --k;
            if (k == 0)
                break;
            ++pick[k - 1];
            for (std::size_t j = k; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    r.elapsed = clock.elapsed();
    return r;
}

/// Largest blue weight in a red-free closed half-space, by raising the
/// threshold until it becomes infeasible.
inline BichromaticReport max_bichromatic_halfspace(const PointSet& ps)
{
    BichromaticReport best = solve_bichromatic_halfspace(ps, 0);
    for (std::uint64_t m = best.value + 1; m <= ps.weight_of(Color::blue); m = best.value + 1) {
        auto r = solve_bichromatic_halfspace(ps, m);
        if (!r.feasible)
            break;
        best = r;
    }
    return best;
}

enum class RangeFamily { halfspace, box };

/// Decides whether S (given as a mask over ps) is an eps-net: every range of
/// the family with total weight >= ceil(eps * W) meets S. A violating range
/// misses S, so recolouring S red and the rest blue reduces the question to a
/// bichromatic threshold of ceil(eps * W).
inline NetReport verify_epsilon_net(const PointSet& ps, const std::vector<bool>& in_s, const Rational& eps,
                                    RangeFamily family, const SolveOptions& opt = {})
{
    if (in_s.size() != ps.size())
        throw std::invalid_argument("subset mask does not match the point set (S must be a subset of P)");
    if (eps.sign() <= 0)
        throw std::invalid_argument("epsilon must be positive");
    PointSet recolored(ps.dim());
    for (std::size_t i = 0; i < ps.size(); ++i)
        recolored.add(ps[i].coords, in_s[i] ? Color::red : Color::blue, ps[i].weight);

    NetReport report;
    Rational need = eps * Rational(ps.total_weight());
    report.threshold = need.ceil().get_ui();
    if (recolored.weight_of(Color::blue) < report.threshold || recolored.weight_of(Color::blue) == 0)
        return report;
    if (family == RangeFamily::box) {
        auto r = solve_bichromatic_box(recolored, false, opt);
        if (r.feasible && r.value >= report.threshold) {
            report.is_net = false;
            report.violator = r.witness;
        }
    } else {
        auto r = solve_bichromatic_halfspace(recolored, report.threshold);
        if (r.feasible) {
            report.is_net = false;
            report.violator = r.witness;
        }
    }
    return report;
}

} // namespace disc
