#pragma once

// Exact solvers for the continuous problems: star discrepancy, box
// discrepancy, maximum empty star and maximum empty box.
//
// Completeness. For anchored boxes the supremum of |vol - count/W| is the
// maximum over critical corners of two one-sided terms: the closed excess
// count[0,x]/W - vol (shrink x onto the largest contained coordinates) and the
// open deficit vol - count[0,x)/W (grow each face until it meets a point
// coordinate or 1). Unanchored boxes add the symmetric argument for lower
// faces, which either sit on a point coordinate or at 0. Empty boxes are open,
// so the same growth argument places every face of a maximal empty box on the
// grid.

#include "disc/detail/ranked.hpp"
#include "disc/parallel.hpp"
#include "disc/reports.hpp"

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

namespace disc {

inline Rational fraction(std::uint64_t num, std::uint64_t den)
{
    return Rational::make(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
}

namespace detail {

using Interval = std::pair<std::uint32_t, std::uint32_t>;

struct BoxChoice {
    std::vector<Interval> faces; // grid ranks per dimension
    Side side = Side::excess;
};

inline std::uint64_t weight_of(const RankedSet& rs, const std::vector<std::uint32_t>& subset)
{
    std::uint64_t w = 0;
    for (auto i : subset)
        w += rs.weights[i];
    return w;
}

inline std::vector<std::uint32_t> all_indices(const RankedSet& rs)
{
    std::vector<std::uint32_t> v(rs.count);
    for (std::uint32_t i = 0; i < rs.count; ++i)
        v[i] = i;
    return v;
}

inline Box to_box(const RankedSet& rs, const std::vector<Interval>& faces, Closure closure)
{
    Box b;
    b.closure = closure;
    for (std::size_t j = 0; j < faces.size(); ++j) {
        b.lower.push_back(rs.value(j, faces[j].first));
        b.upper.push_back(rs.value(j, faces[j].second));
    }
    return b;
}

inline AnchoredBox to_anchored(const RankedSet& rs, const std::vector<Interval>& faces, Closure closure)
{
    AnchoredBox b;
    b.closure = closure;
    for (std::size_t j = 0; j < faces.size(); ++j)
        b.upper.push_back(rs.value(j, faces[j].second));
    return b;
}

/// Odometer over anchored corners with per-dimension filtering of the closed
/// and open survivor lists. No pruning: every corner is evaluated.
class StarDiscrepancySearch {
public:
    StarDiscrepancySearch(const RankedSet& rs, std::uint64_t total)
        : rs_(rs), total_(total), closed_(rs.dim + 1), open_(rs.dim + 1), corner_(rs.dim)
    {
        closed_[0] = all_indices(rs);
        open_[0] = closed_[0];
    }

    void run_task(std::size_t task)
    {
        task_ = task;
        descend(0, Rational(1), task);
    }

    Incumbent<Rational, BoxChoice> best;
    std::uint64_t candidates = 0;

private:
    void descend(std::size_t depth, const Rational& vol, std::size_t only)
    {
        const auto& axis = rs_.grid.axes[depth];
        std::size_t lo = depth == 0 ? only : 0;
        std::size_t hi = depth == 0 ? only + 1 : axis.size();
        for (std::size_t t = lo; t < hi; ++t) {
            auto& c = closed_[depth + 1];
            auto& o = open_[depth + 1];
            c.clear();
            o.clear();
            for (auto i : closed_[depth])
                if (rs_.rank(i, depth) <= t)
                    c.push_back(i);
            for (auto i : open_[depth])
                if (rs_.rank(i, depth) < t)
                    o.push_back(i);
            corner_[depth] = {0, static_cast<std::uint32_t>(t)};
            Rational v = vol * axis[t];
            if (depth + 1 < rs_.dim) {
                descend(depth + 1, v, 0);
                continue;
            }
            ++candidates;
            Rational excess = fraction(weight_of(rs_, c), total_) - v;
            Rational deficit = v - fraction(weight_of(rs_, o), total_);
            if (best.beaten_by(excess))
                best.offer(excess, {corner_, Side::excess}, task_);
            if (best.beaten_by(deficit))
                best.offer(deficit, {corner_, Side::deficit}, task_);
        }
    }

    const RankedSet& rs_;
    std::uint64_t total_;
    std::vector<std::vector<std::uint32_t>> closed_, open_;
    std::vector<Interval> corner_;
    std::size_t task_ = 0;
};

/// Open boxes with faces on the grid (which contains 0 and 1). When
/// require_empty is set only empty boxes count and the value is the volume;
/// otherwise the value is the deficit vol - count/W. Branches whose volume
/// bound cannot beat the incumbent are pruned; a branch that is already empty
/// is completed with (0,1) in all remaining dimensions.
class OpenBoxSearch {
public:
    OpenBoxSearch(const RankedSet& rs, std::uint64_t total, bool require_empty, Incumbent<Rational, BoxChoice>& best,
                  std::uint64_t& candidates)
        : rs_(rs), total_(total), require_empty_(require_empty), best_(best), candidates_(candidates),
          open_(rs.dim + 1), faces_(rs.dim)
    {
        open_[0] = all_indices(rs);
    }

    /// Top-level tasks are the intervals of dimension 0.
    std::vector<Interval> top_intervals() const
    {
        std::vector<Interval> out;
        auto n = static_cast<std::uint32_t>(rs_.grid.axes[0].size());
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = n; b-- > a + 1;)
                out.emplace_back(a, b);
        return out;
    }

    void run(const Interval& first, std::size_t task)
    {
        task_ = task;
        visit(0, Rational(1), first.first, first.second);
    }

private:
    void descend(std::size_t depth, const Rational& vol)
    {
        auto n = static_cast<std::uint32_t>(rs_.grid.axes[depth].size());
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = n; b-- > a + 1;)
                if (!visit(depth, vol, a, b))
                    break; // volume only shrinks as b decreases
    }

    bool visit(std::size_t depth, const Rational& vol, std::uint32_t a, std::uint32_t b)
    {
        const auto& axis = rs_.grid.axes[depth];
        Rational v = vol * (axis[b] - axis[a]);
        if (best_.dominates(v))
            return false;
        auto& s = open_[depth + 1];
        s.clear();
        for (auto i : open_[depth]) {
            auto r = rs_.rank(i, depth);
            if (a < r && r < b)
                s.push_back(i);
        }
        faces_[depth] = {a, b};
        if (s.empty()) {
            ++candidates_;
            for (std::size_t j = depth + 1; j < rs_.dim; ++j)
                faces_[j] = {0, static_cast<std::uint32_t>(rs_.grid.axes[j].size() - 1)};
            best_.offer(v, {faces_, Side::deficit}, task_);
            return true;
        }
        if (depth + 1 < rs_.dim) {
            descend(depth + 1, v);
            return true;
        }
        ++candidates_;
        if (!require_empty_) {
            Rational deficit = v - fraction(weight_of(rs_, s), total_);
            best_.offer(deficit, {faces_, Side::deficit}, task_);
        }
        return true;
    }

    const RankedSet& rs_;
    std::uint64_t total_;
    bool require_empty_;
    Incumbent<Rational, BoxChoice>& best_;
    std::uint64_t& candidates_;
    std::vector<std::vector<std::uint32_t>> open_;
    std::vector<Interval> faces_;
    std::size_t task_ = 0;
};

/// Closed boxes whose faces are coordinates of contained points: any closed
/// box can be shrunk to the bounding box of its contents without changing the
/// count, and shrinking never increases the volume.
class ClosedExcessSearch {
public:
    ClosedExcessSearch(const RankedSet& rs, std::uint64_t total, Incumbent<Rational, BoxChoice>& best,
                       std::uint64_t& candidates)
        : rs_(rs), total_(total), best_(best), candidates_(candidates), closed_(rs.dim + 1), ranks_(rs.dim + 1),
          faces_(rs.dim)
    {
        closed_[0] = all_indices(rs);
    }

    std::vector<Interval> top_intervals()
    {
        std::vector<Interval> out;
        distinct_ranks(rs_, closed_[0], 0, ranks_[0]);
        const auto& r = ranks_[0];
        for (std::size_t a = 0; a < r.size(); ++a)
            for (std::size_t b = a; b < r.size(); ++b)
                out.emplace_back(r[a], r[b]);
        return out;
    }

    void run(const Interval& first, std::size_t task)
    {
        task_ = task;
        visit(0, Rational(1), first.first, first.second);
    }

private:
    void descend(std::size_t depth, const Rational& vol)
    {
        distinct_ranks(rs_, closed_[depth], depth, ranks_[depth]);
        const auto r = ranks_[depth];
        for (std::size_t a = 0; a < r.size(); ++a)
            for (std::size_t b = a; b < r.size(); ++b)
                visit(depth, vol, r[a], r[b]);
    }

    void visit(std::size_t depth, const Rational& vol, std::uint32_t a, std::uint32_t b)
    {
        auto& s = closed_[depth + 1];
        s.clear();
        for (auto i : closed_[depth]) {
            auto r = rs_.rank(i, depth);
            if (a <= r && r <= b)
                s.push_back(i);
        }
        Rational share = fraction(weight_of(rs_, s), total_);
        if (best_.dominates(share))
            return;
        const auto& axis = rs_.grid.axes[depth];
        Rational v = vol * (axis[b] - axis[a]);
        faces_[depth] = {a, b};
        if (depth + 1 < rs_.dim) {
            descend(depth + 1, v);
            return;
        }
        ++candidates_;
        best_.offer(share - v, {faces_, Side::excess}, task_);
    }

    const RankedSet& rs_;
    std::uint64_t total_;
    Incumbent<Rational, BoxChoice>& best_;
    std::uint64_t& candidates_;
    std::vector<std::vector<std::uint32_t>> closed_;
    std::vector<std::vector<std::uint32_t>> ranks_;
    std::vector<Interval> faces_;
    std::size_t task_ = 0;
};

template <class Clock = std::chrono::steady_clock>
struct Stopwatch {
    typename Clock::time_point start = Clock::now();
    std::chrono::nanoseconds elapsed() const
    {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    }
};

} // namespace detail

/// Star discrepancy over anchored boxes [0,x] / [0,x). The witness is the first
/// optimal corner in grid order; excess is preferred over deficit on ties.
inline DiscrepancyReport solve_star_discrepancy(const PointSet& ps, const SolveOptions& opt = {})
{
    detail::Stopwatch<> clock;
    if (ps.empty())
        throw std::invalid_argument("empty point set");
    detail::require_unit_cube(ps);
    auto rs = detail::rank_points(ps, false, true);
    const auto total = ps.total_weight();
    const std::size_t tasks = rs.grid.axes[0].size();

    struct Partial {
        Incumbent<Rational, detail::BoxChoice> best;
        std::uint64_t candidates = 0;
    };
    auto parts = run_workers(opt.threads, tasks, [&](std::size_t first, std::size_t stride) {
        detail::StarDiscrepancySearch search(rs, total);
        for (std::size_t t = first; t < tasks; t += stride)
            search.run_task(t);
        return Partial{search.best, search.candidates};
    });
    Partial all;
    for (const auto& p : parts) {
        all.best.merge(p.best);
        all.candidates += p.candidates;
    }
    const auto& w = all.best.witness;
    DiscrepancyReport r;
    r.value = all.best.value;
    r.side = w.side;
    r.witness = detail::to_anchored(rs, w.faces, w.side == Side::excess ? Closure::closed : Closure::open);
    r.candidates_evaluated = all.candidates;
    r.elapsed = clock.elapsed();
    return r;
}

/// Box discrepancy over all axis-parallel boxes in the unit cube.
inline DiscrepancyReport solve_box_discrepancy(const PointSet& ps, const SolveOptions& opt = {})
{
    detail::Stopwatch<> clock;
    if (ps.empty())
        throw std::invalid_argument("empty point set");
    detail::require_unit_cube(ps);
    auto rs = detail::rank_points(ps, true, true);
    const auto total = ps.total_weight();

    // Closed excess tasks first, then open deficit tasks; ties favour excess.
    std::vector<detail::Interval> excess_tasks, deficit_tasks;
    {
        Incumbent<Rational, detail::BoxChoice> scratch;
        std::uint64_t n = 0;
        excess_tasks = detail::ClosedExcessSearch(rs, total, scratch, n).top_intervals();
        deficit_tasks = detail::OpenBoxSearch(rs, total, false, scratch, n).top_intervals();
    }
    const std::size_t tasks = excess_tasks.size() + deficit_tasks.size();

    struct Partial {
        Incumbent<Rational, detail::BoxChoice> best;
        std::uint64_t candidates = 0;
    };
    auto parts = run_workers(opt.threads, tasks, [&](std::size_t first, std::size_t stride) {
        Partial p;
        detail::ClosedExcessSearch excess(rs, total, p.best, p.candidates);
        detail::OpenBoxSearch deficit(rs, total, false, p.best, p.candidates);
        for (std::size_t t = first; t < tasks; t += stride) {
            if (t < excess_tasks.size())
                excess.run(excess_tasks[t], t);
            else
                deficit.run(deficit_tasks[t - excess_tasks.size()], t);
        }
        return p;
    });
    Partial all;
    for (const auto& p : parts) {
        all.best.merge(p.best);
        all.candidates += p.candidates;
    }
    const auto& w = all.best.witness;
    DiscrepancyReport r;
    r.value = all.best.value;
    r.side = w.side;
    r.witness = detail::to_box(rs, w.faces, w.side == Side::excess ? Closure::closed : Closure::open);
    r.candidates_evaluated = all.candidates;
    r.elapsed = clock.elapsed();
    return r;
}

namespace detail {

/// Open anchored corners [0,x) with x on the grid (which contains 1), largest
/// coordinate first so the volume bound can cut the remaining range.
class EmptyStarSearch {
public:
    EmptyStarSearch(const RankedSet& rs, Incumbent<Rational, BoxChoice>& best, std::uint64_t& candidates)
        : rs_(rs), best_(best), candidates_(candidates), open_(rs.dim + 1), faces_(rs.dim)
    {
        open_[0] = all_indices(rs);
    }

    void run(std::uint32_t first, std::size_t task)
    {
        task_ = task;
        visit(0, Rational(1), first);
    }

private:
    void descend(std::size_t depth, const Rational& vol)
    {
        for (auto t = static_cast<std::uint32_t>(rs_.grid.axes[depth].size()); t-- > 0;)
            if (!visit(depth, vol, t))
                break;
    }

    bool visit(std::size_t depth, const Rational& vol, std::uint32_t t)
    {
        Rational v = vol * rs_.grid.axes[depth][t];
        if (best_.dominates(v))
            return false;
        auto& s = open_[depth + 1];
        s.clear();
        for (auto i : open_[depth])
            if (rs_.rank(i, depth) < t)
                s.push_back(i);
        faces_[depth] = {0, t};
        if (s.empty()) {
            ++candidates_;
            for (std::size_t j = depth + 1; j < rs_.dim; ++j)
                faces_[j] = {0, static_cast<std::uint32_t>(rs_.grid.axes[j].size() - 1)};
            best_.offer(v, {faces_, Side::deficit}, task_);
        } else if (depth + 1 < rs_.dim) {
            descend(depth + 1, v);
        } else {
            ++candidates_;
        }
        return true;
    }

    const RankedSet& rs_;
    Incumbent<Rational, BoxChoice>& best_;
    std::uint64_t& candidates_;
    std::vector<std::vector<std::uint32_t>> open_;
    std::vector<Interval> faces_;
    std::size_t task_ = 0;
};

inline EmptyBoxReport whole_cube(std::size_t dim, bool anchored)
{
    EmptyBoxReport r;
    r.volume = Rational(1);
    if (anchored)
        r.witness = AnchoredBox{Point(dim, Rational(1)), Closure::open};
    else
        r.witness = Box{Point(dim, Rational(0)), Point(dim, Rational(1)), Closure::open};
    r.candidates_evaluated = 1;
    return r;
}

} // namespace detail

/// Largest open anchored box [0,x) inside the unit cube containing no point.
inline EmptyBoxReport solve_max_empty_star(const PointSet& ps, const SolveOptions& opt = {})
{
    detail::Stopwatch<> clock;
    if (ps.empty())
        return detail::whole_cube(ps.dim(), true);
    detail::require_unit_cube(ps);
    auto rs = detail::rank_points(ps, false, true);
    const auto n0 = static_cast<std::uint32_t>(rs.grid.axes[0].size());
    const std::size_t tasks = n0;

    struct Partial {
        Incumbent<Rational, detail::BoxChoice> best;
        std::uint64_t candidates = 0;
    };
    auto parts = run_workers(opt.threads, tasks, [&](std::size_t first, std::size_t stride) {
        Partial p;
        detail::EmptyStarSearch search(rs, p.best, p.candidates);
        for (std::size_t t = first; t < tasks; t += stride)
            search.run(n0 - 1 - static_cast<std::uint32_t>(t), t);
        return p;
    });
    Partial all;
    for (const auto& p : parts) {
        all.best.merge(p.best);
        all.candidates += p.candidates;
    }
    EmptyBoxReport r;
    r.volume = all.best.value;
    r.witness = detail::to_anchored(rs, all.best.witness.faces, Closure::open);
    r.candidates_evaluated = all.candidates;
    r.elapsed = clock.elapsed();
    return r;
}

/// Largest open box inside the unit cube containing no point.
inline EmptyBoxReport solve_max_empty_box(const PointSet& ps, const SolveOptions& opt = {})
{
    detail::Stopwatch<> clock;
    if (ps.empty())
        return detail::whole_cube(ps.dim(), false);
    detail::require_unit_cube(ps);
    auto rs = detail::rank_points(ps, true, true);
    std::vector<detail::Interval> top;
    {
        Incumbent<Rational, detail::BoxChoice> scratch;
        std::uint64_t n = 0;
        top = detail::OpenBoxSearch(rs, 1, true, scratch, n).top_intervals();
    }
    const std::size_t tasks = top.size();

    struct Partial {
        Incumbent<Rational, detail::BoxChoice> best;
        std::uint64_t candidates = 0;
    };
    auto parts = run_workers(opt.threads, tasks, [&](std::size_t first, std::size_t stride) {
        Partial p;
        detail::OpenBoxSearch search(rs, 1, true, p.best, p.candidates);
        for (std::size_t t = first; t < tasks; t += stride)
            search.run(top[t], t);
        return p;
    });
    Partial all;
    for (const auto& p : parts) {
        all.best.merge(p.best);
        all.candidates += p.candidates;
    }
    EmptyBoxReport r;
    r.volume = all.best.value;
    r.witness = detail::to_box(rs, all.best.witness.faces, Closure::open);
    r.candidates_evaluated = all.candidates;
    r.elapsed = clock.elapsed();
    return r;
}

} // namespace disc
