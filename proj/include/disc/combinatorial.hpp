#pragma once

// Bichromatic rectangle (most blue weight in a red-free closed box) and
// red-blue box discrepancy (largest |red - blue| over closed boxes).
//
// Completeness: a closed box can be shrunk to the bounding box of the
// majority-colour points it contains. Shrinking keeps every majority point and
// never adds a minority point, so it suffices to enumerate boxes whose faces
// are coordinates of majority-colour points still inside the partial box.

#include "disc/continuous.hpp"

namespace disc {

namespace detail {

struct MajorityChoice {
    std::vector<std::uint32_t> members; // points inside the witness box
    bool blue_majority = true;
};

/// Recursive face enumeration for one majority colour. With penalize_minority
/// the value is majority minus minority weight, otherwise any minority point
/// makes the box infeasible. When anchored, lower faces are pinned at 0.
class MajoritySearch {
public:
    MajoritySearch(const RankedSet& rs, Color majority, bool penalize_minority, bool anchored,
                   Incumbent<std::int64_t, MajorityChoice>& best, std::uint64_t& candidates)
        : rs_(rs), majority_(majority), penalize_(penalize_minority), anchored_(anchored), best_(best),
          candidates_(candidates), inside_(rs.dim + 1), ranks_(rs.dim + 1)
    {
        inside_[0] = all_indices(rs);
        zero_rank_.resize(rs.dim);
        if (anchored)
            for (std::size_t j = 0; j < rs.dim; ++j)
                zero_rank_[j] = static_cast<std::uint32_t>(rs.grid.index(j, Rational(0)));
    }

    std::vector<Interval> top_intervals() { return intervals(0); }

    void run(const Interval& first, std::size_t task)
    {
        task_ = task;
        visit(0, first);
    }

private:
    std::vector<Interval> intervals(std::size_t depth)
    {
        auto& majority_points = ranks_[depth];
        std::vector<std::uint32_t> subset;
        for (auto i : inside_[depth])
            if (rs_.colors[i] == majority_)
                subset.push_back(i);
        distinct_ranks(rs_, subset, depth, majority_points);
        std::vector<Interval> out;
        if (anchored_) {
            for (auto r : majority_points)
                if (r >= zero_rank_[depth])
                    out.emplace_back(zero_rank_[depth], r);
            return out;
        }
        for (std::size_t a = 0; a < majority_points.size(); ++a)
            for (std::size_t b = a; b < majority_points.size(); ++b)
                out.emplace_back(majority_points[a], majority_points[b]);
        return out;
    }

    void visit(std::size_t depth, const Interval& iv)
    {
        auto& s = inside_[depth + 1];
        s.clear();
        std::int64_t major = 0, minor = 0;
        for (auto i : inside_[depth]) {
            auto r = rs_.rank(i, depth);
            if (iv.first <= r && r <= iv.second) {
                s.push_back(i);
                (rs_.colors[i] == majority_ ? major : minor) += static_cast<std::int64_t>(rs_.weights[i]);
            }
        }
        if (best_.dominates(major))
            return;
        if (minor == 0) {
            // Remaining dimensions can span the whole bounding range at no cost.
            ++candidates_;
            best_.offer(major, {s, majority_ == Color::blue}, task_);
            return;
        }
        if (depth + 1 < rs_.dim) {
            for (const auto& next : intervals(depth + 1))
                visit(depth + 1, next);
            return;
        }
        ++candidates_;
        if (penalize_)
            best_.offer(major - minor, {s, majority_ == Color::blue}, task_);
    }

    const RankedSet& rs_;
    Color majority_;
    bool penalize_;
    bool anchored_;
    Incumbent<std::int64_t, MajorityChoice>& best_;
    std::uint64_t& candidates_;
    std::vector<std::vector<std::uint32_t>> inside_;
    std::vector<std::vector<std::uint32_t>> ranks_;
    std::vector<std::uint32_t> zero_rank_;
    std::size_t task_ = 0;
};

/// Bounding box of the majority-colour members (lower corner 0 when anchored).
inline Box majority_bounding_box(const PointSet& ps, const MajorityChoice& c, bool anchored)
{
    const Color majority = c.blue_majority ? Color::blue : Color::red;
    Box b;
    b.closure = Closure::closed;
    bool first = true;
    for (auto i : c.members) {
        if (ps[i].color != majority)
            continue;
        const auto& x = ps[i].coords;
        if (first) {
            b.lower = x;
            b.upper = x;
            first = false;
            continue;
        }
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] < b.lower[j])
                b.lower[j] = x[j];
            if (x[j] > b.upper[j])
                b.upper[j] = x[j];
        }
    }
    if (anchored)
        b.lower.assign(ps.dim(), Rational(0));
    return b;
}

inline void require_colored(const PointSet& ps)
{
    if (!ps.fully_colored())
        throw std::invalid_argument("every point must be coloured red or blue");
}

} // namespace detail

/// Maximum blue weight in a closed box containing no red weight. With
/// anchored set, boxes are [0, x].
inline BichromaticReport solve_bichromatic_box(const PointSet& ps, bool anchored = false, const SolveOptions& opt = {})
{
    detail::Stopwatch<> clock;
    detail::require_colored(ps);
    if (ps.weight_of(Color::blue) == 0)
        throw std::invalid_argument("no blue points");
    auto rs = detail::rank_points(ps, anchored, false);

    using Best = Incumbent<std::int64_t, detail::MajorityChoice>;
    std::vector<detail::Interval> top;
    {
        Best scratch;
        std::uint64_t n = 0;
        top = detail::MajoritySearch(rs, Color::blue, false, anchored, scratch, n).top_intervals();
    }
    struct Partial {
        Best best;
        std::uint64_t candidates = 0;
    };
    auto parts = run_workers(opt.threads, top.size(), [&](std::size_t first, std::size_t stride) {
        Partial p;
        detail::MajoritySearch search(rs, Color::blue, false, anchored, p.best, p.candidates);
        for (std::size_t t = first; t < top.size(); t += stride)
            search.run(top[t], t);
        return p;
    });
    Partial all;
    for (const auto& p : parts) {
        all.best.merge(p.best);
        all.candidates += p.candidates;
    }
    BichromaticReport r;
    r.feasible = all.best.has;
    r.candidates_evaluated = all.candidates;
    if (all.best.has) {
        r.value = static_cast<std::uint64_t>(all.best.value);
        r.witness = detail::majority_bounding_box(ps, all.best.witness, anchored);
    }
    r.elapsed = clock.elapsed();
    return r;
}

/// Largest |red - blue| weight over closed boxes. Side is excess when blue is
/// the majority in the witness and deficit when red is.
inline DiscrepancyReport solve_redblue_box_discrepancy(const PointSet& ps, const SolveOptions& opt = {})
{
    detail::Stopwatch<> clock;
    if (ps.empty())
        throw std::invalid_argument("empty point set");
    detail::require_colored(ps);
    auto rs = detail::rank_points(ps, false, false);

    using Best = Incumbent<std::int64_t, detail::MajorityChoice>;
    std::vector<detail::Interval> blue_tasks, red_tasks;
    {
        Best scratch;
        std::uint64_t n = 0;
        blue_tasks = detail::MajoritySearch(rs, Color::blue, true, false, scratch, n).top_intervals();
        red_tasks = detail::MajoritySearch(rs, Color::red, true, false, scratch, n).top_intervals();
    }
    const std::size_t tasks = blue_tasks.size() + red_tasks.size();
    struct Partial {
        Best best;
        std::uint64_t candidates = 0;
    };
    auto parts = run_workers(opt.threads, tasks, [&](std::size_t first, std::size_t stride) {
        Partial p;
        detail::MajoritySearch blue(rs, Color::blue, true, false, p.best, p.candidates);
        detail::MajoritySearch red(rs, Color::red, true, false, p.best, p.candidates);
        for (std::size_t t = first; t < tasks; t += stride) {
            if (t < blue_tasks.size())
                blue.run(blue_tasks[t], t);
            else
                red.run(red_tasks[t - blue_tasks.size()], t);
        }
        return p;
    });
    Partial all;
    for (const auto& p : parts) {
        all.best.merge(p.best);
        all.candidates += p.candidates;
    }
    DiscrepancyReport r;
    const auto& choice = all.best.witness;
    Box box = detail::majority_bounding_box(ps, choice, false);
    // The bounding box may shed minority points the enumeration box still held.
    auto c = count_in_box(ps, box);
    std::int64_t diff = static_cast<std::int64_t>(c.blue) - static_cast<std::int64_t>(c.red);
    r.value = Rational(diff < 0 ? -diff : diff);
    r.side = choice.blue_majority ? Side::excess : Side::deficit;
    r.witness = box;
    r.candidates_evaluated = all.candidates;
    r.elapsed = clock.elapsed();
    return r;
}

} // namespace disc
