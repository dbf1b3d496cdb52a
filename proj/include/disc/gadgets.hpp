#pragma once

// Compilers from (graph G, clique size k) to hard point sets in R^{2k}.
//
// Coordinates are grouped into k planes; plane i occupies dimensions 2i and
// 2i+1. A scaffold in each plane offers one choice per vertex, and "kill"
// points in the product of two planes forbid choosing two vertices that are
// equal or non-adjacent. Each instance records the value a solver returns
// exactly when G has a k-clique.

#include "disc/geometry.hpp"
#include "disc/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace disc {

enum class Problem {
    bichromatic_box,
    redblue_disc,
    empty_star,
    star_disc,
    empty_box,
    box_disc,
    halfspace_bichromatic,
    net_halfspace,
    net_box,
};

inline constexpr std::pair<Problem, std::string_view> problem_names[] = {
    {Problem::bichromatic_box, "bichromatic-box"},
    {Problem::redblue_disc, "redblue-disc"},
    {Problem::empty_star, "empty-star"},
    {Problem::star_disc, "star-disc"},
    {Problem::empty_box, "empty-box"},
    {Problem::box_disc, "box-disc"},
    {Problem::halfspace_bichromatic, "halfspace-bichromatic"},
    {Problem::net_halfspace, "net-halfspace"},
    {Problem::net_box, "net-box"},
};

inline std::string to_string(Problem p)
{
    for (const auto& [q, name] : problem_names)
        if (q == p)
            return std::string(name);
    return "unknown";
}

/// Canonical names plus the short aliases accepted on the command line.
inline std::optional<Problem> parse_problem(std::string_view s)
{
    for (const auto& [q, name] : problem_names)
        if (name == s)
            return q;
    struct Alias {
        std::string_view name;
        Problem p;
    };
    static constexpr Alias aliases[] = {
        {"bichromatic", Problem::bichromatic_box}, {"redblue", Problem::redblue_disc},
        {"max-empty-star", Problem::empty_star},   {"max-empty-box", Problem::empty_box},
        {"halfspace", Problem::halfspace_bichromatic}, {"star-discrepancy", Problem::star_disc},
        {"box-discrepancy", Problem::box_disc},        {"redblue-discrepancy", Problem::redblue_disc},
    };
    for (const auto& a : aliases)
        if (a.name == s)
            return a.p;
    return std::nullopt;
}

/// Problems whose optimum is an integer weight.
inline bool integer_valued(Problem p)
{
    switch (p) {
    case Problem::bichromatic_box:
    case Problem::redblue_disc:
    case Problem::halfspace_bichromatic:
    case Problem::net_halfspace:
    case Problem::net_box: return true;
    default: return false;
    }
}

struct GadgetParams {
    int k = 0;
    int n = 0;
    std::uint64_t N = 0; // total point weight of the instance
    std::optional<std::uint64_t> t;
    std::optional<Rational> mu;
    std::optional<Rational> C; // 1 / mu^(n-1)
    std::optional<Rational> V; // C^k
    std::optional<Rational> eps;
};

struct GadgetInstance {
    Problem problem = Problem::bichromatic_box;
    GadgetParams params;
    PointSet points{1};
    Rational expected_positive;
    std::optional<Rational> expected_negative;
    std::vector<bool> in_s; // net instances only
};

struct MuChoice {
    std::uint64_t t = 0;
    Rational mu;
};

namespace detail {

inline void require_reduction_args(const Graph& g, int k)
{
    if (k < 2 || g.n() < 2)
        throw std::invalid_argument("degenerate reduction (need k >= 2 and n >= 2)");
}

inline Point in_plane(int k, int plane, const Rational& x, const Rational& y)
{
    Point p(static_cast<std::size_t>(2 * k));
    p[static_cast<std::size_t>(2 * plane)] = x;
    p[static_cast<std::size_t>(2 * plane + 1)] = y;
    return p;
}

inline Point plus(Point a, const Point& b)
{
    for (std::size_t j = 0; j < a.size(); ++j)
        a[j] += b[j];
    return a;
}

/// Kill-pair enumeration: ordered planes i != j and vertices (u, v) that are
/// equal or non-adjacent. Callers deduplicate, since (i,j,u,v) and (j,i,v,u)
/// produce the same point.
template <class Fn>
void for_each_forbidden_pair(const Graph& g, int k, Fn fn)
{
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            for (int u = 1; u <= g.n(); ++u)
                for (int v = 1; v <= g.n(); ++v)
                    if (u == v || !g.has_edge(u, v))
                        fn(i, j, u, v);
        }
}

inline Rational mu_power(const Rational& mu, long e)
{
    return e >= 0 ? rat_pow(mu, e) : reciprocal(rat_pow(mu, -e));
}

/// The uncoloured empty-star construction for a given mu: per plane the
/// staircase p_i(u) = (C mu^(u-1), mu^-u), u = 0..n, plus kill points
/// kill_i(u) + kill_j(v) with kill_i(u) = (C mu^(u-2), mu^-u).
inline PointSet staircase_points(const Graph& g, int k, const Rational& mu)
{
    const int n = g.n();
    const Rational c = reciprocal(rat_pow(mu, n - 1));
    PointSet ps(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i)
        for (int u = 0; u <= n; ++u)
            ps.add(in_plane(k, i, c * mu_power(mu, u - 1), reciprocal(rat_pow(mu, u))));
    auto kill = [&](int plane, int u) {
        return in_plane(k, plane, c * mu_power(mu, u - 2), reciprocal(rat_pow(mu, u)));
    };
    std::set<Point> kills;
    for_each_forbidden_pair(g, k, [&](int i, int j, int u, int v) { kills.insert(plus(kill(i, u), kill(j, v))); });
    for (const auto& p : kills)
        ps.add(p);
    return ps;
}

inline std::uint64_t staircase_size(const Graph& g, int k)
{
    return staircase_points(g, k, Rational(2)).size();
}

inline void set_mu_params(GadgetParams& params, const Rational& mu)
{
    params.mu = mu;
    params.C = reciprocal(rat_pow(mu, params.n - 1));
    params.V = rat_pow(*params.C, params.k);
}

inline void require(bool ok, const char* what)
{
    if (!ok)
        throw std::logic_error(what);
}

} // namespace detail

/// t = 2knN and mu = 1 + 1/t, which guarantees mu^(k(n-1)) < N/(N-1).
inline MuChoice choose_mu(int k, int n, std::uint64_t N)
{
    if (k < 2 || n < 2 || N < 2)
        throw std::invalid_argument("choose_mu needs k, n, N >= 2");
    MuChoice c;
    c.t = 2 * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n) * N;
    c.mu = Rational(1) + reciprocal(Rational(c.t));
    detail::require(rat_pow(c.mu, static_cast<long>(k) * (n - 1)) < Rational(N) / Rational(N - 1),
                    "mu^(k(n-1)) < N/(N-1) violated");
    return c;
}

/// Every zero coordinate becomes 1/2.
inline PointSet lift_points(const PointSet& ps)
{
    PointSet out(ps.dim());
    for (const auto& p : ps) {
        Point x = p.coords;
        for (auto& c : x)
            if (c.sign() == 0)
                c = Rational::make(1, 2);
        out.add(std::move(x), p.color, p.weight);
    }
    return out;
}

/// Blue origin and b_i(v) = (v, n+1-v); red separators r_i(v) = b_i(v) +
/// (1/2, -1/2) for v < n; red kill points b_i(u) + b_j(v). Normalised by
/// 1/(n+1) into the unit cube unless `normalize` is false; the scaling is an
/// order isomorphism, so box optima are unchanged.
inline GadgetInstance build_bichromatic_gadget(const Graph& g, int k, bool normalize = true)
{
    detail::require_reduction_args(g, k);
    const int n = g.n();
    const Rational half = Rational::make(1, 2);
    auto blue = [&](int plane, int v) { return detail::in_plane(k, plane, Rational(v), Rational(n + 1 - v)); };

    GadgetInstance inst;
    inst.problem = Problem::bichromatic_box;
    inst.points = PointSet(static_cast<std::size_t>(2 * k));
    auto& ps = inst.points;
    ps.add(Point(ps.dim()), Color::blue);
    for (int i = 0; i < k; ++i)
        for (int v = 1; v <= n; ++v)
            ps.add(blue(i, v), Color::blue);
    for (int i = 0; i < k; ++i)
        for (int v = 1; v < n; ++v)
            ps.add(detail::in_plane(k, i, Rational(v) + half, Rational(n + 1 - v) - half), Color::red);
    std::set<Point> kills;
    detail::for_each_forbidden_pair(g, k, [&](int i, int j, int u, int v) { kills.insert(detail::plus(blue(i, u), blue(j, v))); });
    for (const auto& p : kills)
        ps.add(p, Color::red);

    if (normalize) {
        const Rational scale = reciprocal(Rational(n + 1));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (auto& c : ps[i].coords)
                c *= scale;
    }
    inst.params.k = k;
    inst.params.n = n;
    inst.params.N = ps.total_weight();
    inst.expected_positive = Rational(k + 1);
    return inst;
}

/// The bichromatic construction with the blue origin replaced by N copies,
/// N being the construction's point count. A clique shows as a box with N + k
/// more blue than red weight.
inline GadgetInstance build_redblue_gadget(const Graph& g, int k, bool normalize = true)
{
    auto inst = build_bichromatic_gadget(g, k, normalize);
    const std::uint64_t base = inst.points.size();
    inst.problem = Problem::redblue_disc;
    inst.points[0].weight = base;
    inst.params.N = inst.points.total_weight();
    inst.expected_positive = Rational(base) + Rational(k);
    return inst;
}

/// The staircase construction for a caller-chosen mu > 1. The largest empty
/// star has volume C^k with a k-clique and at most C^k / mu without.
inline GadgetInstance build_empty_star_gadget(const Graph& g, int k, const Rational& mu)
{
    detail::require_reduction_args(g, k);
    if (mu <= Rational(1))
        throw std::invalid_argument("mu must exceed 1");
    GadgetInstance inst;
    inst.problem = Problem::empty_star;
    inst.points = detail::staircase_points(g, k, mu);
    inst.params.k = k;
    inst.params.n = g.n();
    inst.params.N = inst.points.total_weight();
    detail::set_mu_params(inst.params, mu);
    inst.expected_positive = *inst.params.V;
    inst.expected_negative = *inst.params.V / mu;
    return inst;
}

/// Staircase construction with mu from choose_mu, so that an empty star of
/// volume C^k outweighs any excess (at most (N-1)/N).
inline GadgetInstance build_star_discrepancy_gadget(const Graph& g, int k)
{
    detail::require_reduction_args(g, k);
    const auto N = detail::staircase_size(g, k);
    const auto choice = choose_mu(k, g.n(), N);
    auto inst = build_empty_star_gadget(g, k, choice.mu);
    inst.problem = Problem::star_disc;
    inst.params.t = choice.t;
    inst.expected_negative.reset();
    const Rational n_ = Rational(inst.params.N);
    detail::require(*inst.params.V > (n_ - Rational(1)) / n_, "C^k > (N-1)/N violated");
    return inst;
}

/// Lifted staircase construction. Every lifted point lies in [1/2, 1]^{2k}, so
/// a box of volume above 2/3 can be pushed down to the origin and contains a
/// lifted point exactly when its projection does.
inline GadgetInstance build_empty_box_gadget(const Graph& g, int k)
{
    detail::require_reduction_args(g, k);
    const auto N = detail::staircase_size(g, k);
    const auto choice = choose_mu(k, g.n(), N);
    auto inst = build_empty_star_gadget(g, k, choice.mu);
    inst.problem = Problem::empty_box;
    inst.params.t = choice.t;
    inst.points = lift_points(inst.points);
    const Rational n_ = Rational(N);
    detail::require(*inst.params.V > Rational::make(2, 3), "C^k > 2/3 violated");
    detail::require(*inst.params.V > (n_ - Rational(1)) / n_, "C^k > (N-1)/N violated");
    return inst;
}

/// Lifted staircase construction plus an (unlifted) origin and the all-ones
/// point, so that only the full cube holds every point.
inline GadgetInstance build_box_discrepancy_gadget(const Graph& g, int k)
{
    detail::require_reduction_args(g, k);
    const auto N = detail::staircase_size(g, k) + 2;
    const auto choice = choose_mu(k, g.n(), N);
    auto base = detail::staircase_points(g, k, choice.mu);
    GadgetInstance inst;
    inst.problem = Problem::box_disc;
    inst.points = lift_points(base);
    inst.points.add(Point(base.dim(), Rational(0)));
    inst.points.add(Point(base.dim(), Rational(1)));
    inst.params.k = k;
    inst.params.n = g.n();
    inst.params.N = inst.points.total_weight();
    inst.params.t = choice.t;
    detail::set_mu_params(inst.params, choice.mu);
    inst.expected_positive = *inst.params.V;
    const Rational n_ = Rational(inst.params.N);
    detail::require(inst.params.N == N, "point count differs from the count used for mu");
    detail::require(*inst.params.V > (n_ - Rational(1)) / n_, "C^k > (N-1)/N violated");
    return inst;
}

/// Point on the arc of the unit circle around (1,1) that faces the origin,
/// parametrised rationally by t in (0,1).
inline std::pair<Rational, Rational> arc_point(const Rational& t)
{
    const Rational t2 = t * t;
    const Rational den = Rational(1) + t2;
    return {Rational(1) - (Rational(1) - t2) / den, Rational(1) - Rational(2) * t / den};
}

/// Half-space variant. Per plane, blue b_i(v) sits on the arc at t = v/(n+1)
/// and red points sit on the same arc at t = (2v+1)/(2(n+1)), v = 0..n: one
/// between each pair of consecutive blues and one guard beyond each end. A
/// line meets the circle at most twice, so a red-free half-space takes at most
/// one blue per plane. Red kill points are midpoints (b_i(u) + b_j(v)) / 2.
/// The arc is convex towards the origin, so the tangent at each chosen blue
/// keeps the origin on its side and every other arc point strictly outside.
inline GadgetInstance build_halfspace_gadget(const Graph& g, int k)
{
    detail::require_reduction_args(g, k);
    const int n = g.n();
    auto blue = [&](int plane, int v) {
        auto [x, y] = arc_point(Rational::make(v, n + 1));
        return detail::in_plane(k, plane, x, y);
    };
    GadgetInstance inst;
    inst.problem = Problem::halfspace_bichromatic;
    inst.points = PointSet(static_cast<std::size_t>(2 * k));
    auto& ps = inst.points;
    ps.add(Point(ps.dim()), Color::blue);
    for (int i = 0; i < k; ++i)
        for (int v = 1; v <= n; ++v)
            ps.add(blue(i, v), Color::blue);
    for (int i = 0; i < k; ++i)
        for (int v = 0; v <= n; ++v) {
            auto [x, y] = arc_point(Rational::make(2 * v + 1, 2 * (n + 1)));
            ps.add(detail::in_plane(k, i, x, y), Color::red);
        }
    std::set<Point> kills;
    const Rational half = Rational::make(1, 2);
    detail::for_each_forbidden_pair(g, k, [&](int i, int j, int u, int v) {
        auto mid = detail::plus(blue(i, u), blue(j, v));
        for (auto& c : mid)
            c *= half;
        kills.insert(std::move(mid));
    });
    for (const auto& p : kills)
        ps.add(p, Color::red);
    inst.params.k = k;
    inst.params.n = n;
    inst.params.N = ps.total_weight();
    inst.expected_positive = Rational(k + 1);
    return inst;
}

/// Net-verification instance: P is the whole gadget and S its red points.
/// eps = (k+1)/|P|, so a violating range is a red-free range with the k+1
/// blue points that witness a clique.
inline GadgetInstance build_net_instance(const Graph& g, int k, bool halfspaces)
{
    auto inst = halfspaces ? build_halfspace_gadget(g, k) : build_bichromatic_gadget(g, k);
    inst.problem = halfspaces ? Problem::net_halfspace : Problem::net_box;
    inst.in_s.clear();
    for (const auto& p : inst.points)
        inst.in_s.push_back(p.color == Color::red);
    inst.params.eps = Rational(k + 1) / Rational(inst.params.N);
    return inst;
}

/// Dispatch by problem name; mu only applies to the empty-star gadget.
inline GadgetInstance build_gadget(Problem p, const Graph& g, int k, std::optional<Rational> mu = std::nullopt,
                                   bool normalize = true)
{
    switch (p) {
    case Problem::bichromatic_box: return build_bichromatic_gadget(g, k, normalize);
    case Problem::redblue_disc: return build_redblue_gadget(g, k, normalize);
    case Problem::empty_star: return build_empty_star_gadget(g, k, mu.value_or(Rational(2)));
    case Problem::star_disc: return build_star_discrepancy_gadget(g, k);
    case Problem::empty_box: return build_empty_box_gadget(g, k);
    case Problem::box_disc: return build_box_discrepancy_gadget(g, k);
    case Problem::halfspace_bichromatic: return build_halfspace_gadget(g, k);
    case Problem::net_halfspace: return build_net_instance(g, k, true);
    case Problem::net_box: return build_net_instance(g, k, false);
    }
    throw std::invalid_argument("unknown problem");
}

} // namespace disc
