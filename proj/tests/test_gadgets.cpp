#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace testing_support;

namespace {

Graph single_edge() { return graph_from_edges(2, {{1, 2}}); }

bool has_point(const PointSet& ps, const Point& p, Color c)
{
    return std::any_of(ps.begin(), ps.end(), [&](const auto& q) { return q.coords == p && q.color == c; });
}

/// Points that lie in plane i only (every coordinate outside 2i, 2i+1 is 0).
std::vector<Point> plane_points(const PointSet& ps, std::size_t plane, Color c)
{
    std::vector<Point> out;
    for (const auto& p : ps) {
        bool here = p.color == c;
        for (std::size_t j = 0; j < ps.dim() && here; ++j)
            if (j / 2 != plane && p.coords[j].sign() != 0)
                here = false;
        if (here && (p.coords[2 * plane].sign() != 0 || p.coords[2 * plane + 1].sign() != 0))
            out.push_back({p.coords[2 * plane], p.coords[2 * plane + 1]});
    }
    return out;
}

} // namespace

TEST(Graphs, IsomorphismClassCounts)
{
    EXPECT_EQ(graphs_up_to_isomorphism(2).size(), 2u);
    EXPECT_EQ(graphs_up_to_isomorphism(3).size(), 4u);
    EXPECT_EQ(graphs_up_to_isomorphism(4).size(), 11u);
}

TEST(Graphs, RejectsInvalidEdges)
{
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(1, 4), std::invalid_argument);
    g.add_edge(1, 2);
    EXPECT_THROW(g.add_edge(2, 1), std::invalid_argument);
}

TEST(BichromaticGadget, K3Counts)
{
    auto inst = build_bichromatic_gadget(complete_graph(3), 2, false);
    EXPECT_EQ(inst.points.dim(), 4u);
    EXPECT_EQ(inst.points.weight_of(Color::blue), 7u);
    EXPECT_EQ(inst.points.weight_of(Color::red), 7u);
    EXPECT_EQ(inst.params.N, 14u);
    EXPECT_TRUE(has_point(inst.points, P({"2", "2", "0", "0"}), Color::blue));
    EXPECT_TRUE(has_point(inst.points, P({"3/2", "5/2", "0", "0"}), Color::red));
    EXPECT_TRUE(has_point(inst.points, P({"1", "3", "1", "3"}), Color::red));
    EXPECT_EQ(inst.expected_positive, Rational(3));
}

TEST(BichromaticGadget, EmptyGraphKillsEveryPair)
{
    auto inst = build_bichromatic_gadget(empty_graph(2), 2, false);
    auto b = [](int v) { return std::pair{Rational(v), Rational(3 - v)}; };
    for (int u = 1; u <= 2; ++u)
        for (int v = 1; v <= 2; ++v)
            EXPECT_TRUE(has_point(inst.points, Point{b(u).first, b(u).second, b(v).first, b(v).second}, Color::red))
                << u << "," << v;
}

TEST(BichromaticGadget, NormalisedIntoUnitCube)
{
    auto raw = build_bichromatic_gadget(complete_graph(3), 2, false);
    auto inst = build_bichromatic_gadget(complete_graph(3), 2);
    EXPECT_TRUE(inst.points.inside_unit_cube());
    ASSERT_EQ(raw.points.size(), inst.points.size());
    for (std::size_t i = 0; i < raw.points.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(raw.points[i].coords[j] / Rational(4), inst.points[i].coords[j]);
}

TEST(RedBlueGadget, Weights)
{
    auto inst = build_redblue_gadget(complete_graph(3), 2);
    EXPECT_EQ(inst.points[0].weight, 14u);
    EXPECT_EQ(inst.points[0].coords, Point(4, Rational(0)));
    EXPECT_EQ(inst.expected_positive, Rational(16));
    EXPECT_EQ(inst.params.N, inst.points.total_weight());
}

TEST(RedBlueGadget, PlaneScaffoldIsBalanced)
{
    // Scaffold points of one plane alternate blue/red along a descending
    // staircase, so any box takes a contiguous run: |blue - red| <= 1.
    for (int n = 2; n <= 5; ++n) {
        auto inst = build_redblue_gadget(complete_graph(n), 2, false);
        for (std::size_t plane = 0; plane < 2; ++plane) {
            auto blues = plane_points(inst.points, plane, Color::blue);
            auto reds = plane_points(inst.points, plane, Color::red);
            std::set<Rational> xs, ys;
            for (const auto* set : {&blues, &reds})
                for (const auto& p : *set) {
                    xs.insert(p[0]);
                    ys.insert(p[1]);
                }
            for (const auto& x0 : xs)
                for (const auto& x1 : xs)
                    for (const auto& y0 : ys)
                        for (const auto& y1 : ys) {
                            Box b{{x0, y0}, {x1, y1}, Closure::closed};
                            long diff = 0;
                            for (const auto& p : blues)
                                diff += contains(b, p);
                            for (const auto& p : reds)
                                diff -= contains(b, p);
                            EXPECT_LE(std::abs(diff), 1);
                        }
        }
    }
}

TEST(EmptyStarGadget, StaircaseCoordinates)
{
    auto inst = build_empty_star_gadget(complete_graph(3), 2, Rational(2));
    EXPECT_EQ(*inst.params.C, R("1/4"));
    for (const auto& [x, y] : {std::pair{"1/8", "1"}, {"1/4", "1/2"}, {"1/2", "1/4"}, {"1", "1/8"}}) {
        EXPECT_TRUE(has_point(inst.points, P({x, y, "0", "0"}), Color::none)) << x << "," << y;
        EXPECT_TRUE(has_point(inst.points, P({"0", "0", x, y}), Color::none)) << x << "," << y;
    }
    // c(2) = (C mu, 1/mu) = (1/2, 1/2) spans a rectangle of area C.
    EXPECT_EQ(*inst.params.C * Rational(2) * R("1/2"), R("1/4"));
    for (const auto& p : inst.points)
        for (const auto& x : p.coords) {
            EXPECT_GE(x, Rational(0));
            EXPECT_LE(x, Rational(1));
        }
}

TEST(EmptyStarGadget, Expectations)
{
    auto inst = build_empty_star_gadget(single_edge(), 2, Rational(2));
    EXPECT_EQ(inst.expected_positive, R("1/4"));
    EXPECT_EQ(*inst.expected_negative, R("1/8"));
    EXPECT_THROW(build_empty_star_gadget(single_edge(), 2, Rational(1)), std::invalid_argument);
    EXPECT_THROW(build_empty_star_gadget(single_edge(), 1, Rational(2)), std::invalid_argument);
    EXPECT_THROW(build_empty_star_gadget(Graph(1), 2, Rational(2)), std::invalid_argument);
}

TEST(ChooseMu, Examples)
{
    auto a = choose_mu(2, 2, 8);
    EXPECT_EQ(a.t, 64u);
    EXPECT_EQ(a.mu, R("65/64"));
    EXPECT_LT(rat_pow(a.mu, 2), R("8/7"));
    auto b = choose_mu(2, 3, 20);
    EXPECT_EQ(b.t, 240u);
    EXPECT_EQ(b.mu, R("241/240"));
    EXPECT_LT(rat_pow(b.mu, 4), R("20/19"));
    auto c = choose_mu(3, 4, 50);
    EXPECT_EQ(c.t, 1200u);
    EXPECT_EQ(c.mu, R("1201/1200"));
    EXPECT_LT(rat_pow(c.mu, 9), R("50/49"));
}

TEST(ChooseMu, BoundHoldsOnTheWholeRange)
{
    for (int k = 2; k <= 4; ++k)
        for (int n = 2; n <= 5; ++n)
            for (std::uint64_t N = 4; N <= 60; ++N) {
                auto c = choose_mu(k, n, N);
                EXPECT_EQ(c.t, 2u * static_cast<std::uint64_t>(k * n) * N);
                EXPECT_LT(rat_pow(c.mu, static_cast<long>(k) * (n - 1)), Rational(N) / Rational(N - 1));
            }
}

TEST(StarDiscrepancyGadget, SingleEdge)
{
    auto inst = build_star_discrepancy_gadget(single_edge(), 2);
    EXPECT_EQ(inst.params.N, 8u);
    EXPECT_EQ(*inst.params.t, 64u);
    EXPECT_EQ(*inst.params.mu, R("65/64"));
    EXPECT_EQ(inst.expected_positive, R("4096/4225"));
    EXPECT_GT(inst.expected_positive, R("7/8"));
}

TEST(StarDiscrepancyGadget, ExcessNeverBeatsTheEmptyStar)
{
    for (int n = 2; n <= 3; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n)) {
            auto inst = build_star_discrepancy_gadget(g, 2);
            const Rational N(inst.params.N);
            EXPECT_LE(max_closed_excess(inst.points), (N - Rational(1)) / N);
        }
}

TEST(Lift, Examples)
{
    PointSet ps(4);
    ps.add(P({"1", "3", "0", "0"}));
    ps.add(P({"0", "0", "0", "0"}));
    ps.add(P({"1/4", "1", "1/8", "1"}));
    auto l = lift_points(ps);
    EXPECT_EQ(l[0].coords, P({"1", "3", "1/2", "1/2"}));
    EXPECT_EQ(l[1].coords, P({"1/2", "1/2", "1/2", "1/2"}));
    EXPECT_EQ(l[2].coords, P({"1/4", "1", "1/8", "1"}));
}

TEST(EmptyBoxGadget, LiftedIntoUpperHalfCube)
{
    auto inst = build_empty_box_gadget(single_edge(), 2);
    for (const auto& p : inst.points)
        for (const auto& x : p.coords) {
            EXPECT_GE(x, R("1/2"));
            EXPECT_LE(x, Rational(1));
        }
    EXPECT_GT(*inst.params.V, R("2/3"));
}

TEST(EmptyBoxGadget, LargeBoxesSeeOnlyTheCorrespondingPlane)
{
    for (const auto& g : {single_edge(), empty_graph(2)}) {
        auto inst = build_empty_box_gadget(g, 2);
        auto base = detail::staircase_points(g, 2, *inst.params.mu);
        auto check = check_lifting(base, inst.points);
        EXPECT_GT(check.boxes, 0u);
        EXPECT_EQ(check.violations, 0u);
    }
}

TEST(BoxDiscrepancyGadget, SingleEdge)
{
    auto inst = build_box_discrepancy_gadget(single_edge(), 2);
    EXPECT_EQ(inst.params.N, 10u);
    EXPECT_EQ(*inst.params.t, 80u);
    EXPECT_EQ(*inst.params.mu, R("81/80"));
    EXPECT_TRUE(has_point(inst.points, Point(4, Rational(0)), Color::none));
    EXPECT_TRUE(has_point(inst.points, Point(4, Rational(1)), Color::none));
    Box cube{Point(4, Rational(0)), Point(4, Rational(1)), Closure::closed};
    const Rational term = box_volume(cube) - Rational(count_in_box(inst.points, cube).total()) / Rational(10);
    EXPECT_EQ(term, Rational(0));
}

TEST(HalfspaceGadget, ArcPlacement)
{
    auto inst = build_halfspace_gadget(complete_graph(3), 2);
    auto blues = plane_points(inst.points, 0, Color::blue);
    auto reds = plane_points(inst.points, 0, Color::red);
    ASSERT_EQ(blues.size(), 3u);
    ASSERT_EQ(reds.size(), 4u);
    for (const char* t : {"1/4", "1/2", "3/4"}) {
        auto [x, y] = arc_point(R(t));
        EXPECT_NE(std::find(blues.begin(), blues.end(), Point{x, y}), blues.end()) << t;
    }
    EXPECT_EQ(arc_point(R("1/2")), std::pair(R("2/5"), R("1/5")));
    for (const char* t : {"1/8", "7/8"}) {
        auto [x, y] = arc_point(R(t));
        EXPECT_NE(std::find(reds.begin(), reds.end(), Point{x, y}), reds.end()) << t;
    }
    // Every arc point is on the unit circle about (1, 1).
    for (const auto& p : blues)
        EXPECT_EQ((Rational(1) - p[0]) * (Rational(1) - p[0]) + (Rational(1) - p[1]) * (Rational(1) - p[1]),
                  Rational(1));
}

TEST(NetInstance, MarksRedPoints)
{
    auto inst = build_net_instance(complete_graph(3), 2, false);
    ASSERT_EQ(inst.in_s.size(), inst.points.size());
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        EXPECT_EQ(inst.in_s[i], inst.points[i].color == Color::red);
    EXPECT_EQ(*inst.params.eps, Rational(3) / Rational(inst.params.N));
}

TEST(GadgetProperty, ShapeAndWeights)
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n))
            for (int k = 2; k <= 3; ++k)
                for (auto [p, name] : problem_names) {
                    auto inst = build_gadget(p, g, k);
                    EXPECT_EQ(inst.points.dim(), static_cast<std::size_t>(2 * k)) << name;
                    EXPECT_EQ(inst.params.N, inst.points.total_weight()) << name;
                    EXPECT_TRUE(inst.points.inside_unit_cube()) << name;
                    if (p == Problem::empty_star || p == Problem::star_disc)
                        for (const auto& q : inst.points) {
                            bool any = false;
                            for (const auto& x : q.coords)
                                any = any || x.sign() > 0;
                            EXPECT_TRUE(any);
                        }
                }
}

TEST(GadgetProperty, RegionBoundPerPlane)
{
    for (const Rational& mu : {Rational(2), Rational(3), R("65/64")})
        for (int n = 2; n <= 4; ++n)
            for (const auto& g : {complete_graph(n), empty_graph(n)}) {
                auto ps = detail::staircase_points(g, 2, mu);
                const Rational C = reciprocal(rat_pow(mu, n - 1));
                EXPECT_LE(largest_region_free_area(ps, 2, n, mu), C / mu) << "n=" << n << " mu=" << mu;
            }
}

TEST(GadgetProperty, InapproximabilityGap)
{
    const Rational mu = rat_pow(Rational(2), 64);
    auto pos = solve_max_empty_star(build_empty_star_gadget(single_edge(), 2, mu).points).volume;
    auto neg = solve_max_empty_star(build_empty_star_gadget(empty_graph(2), 2, mu).points).volume;
    EXPECT_EQ(pos / neg, mu);
}

TEST(GadgetProperty, MuIsHonouredOnlyByEmptyStar)
{
    auto a = build_gadget(Problem::empty_star, single_edge(), 2, R("3"));
    EXPECT_EQ(*a.params.mu, Rational(3));
    auto b = build_gadget(Problem::star_disc, single_edge(), 2, R("3"));
    EXPECT_EQ(*b.params.mu, R("65/64"));
}

TEST(GadgetProperty, EmptyStarValueFollowsCliqueNumber)
{
    // Planes holding a full rectangle must pick pairwise adjacent, distinct
    // vertices; every other plane is capped at C / mu. The optimum is
    // therefore C^k / mu^(k - w) with w = min(k, clique number).
    for (const Rational& mu : {Rational(2), Rational(3)})
        for (int n = 2; n <= 4; ++n)
            for (const auto& g : graphs_up_to_isomorphism(n))
                for (int k = 2; k <= std::min(3, n); ++k) {
                    int w = 1;
                    while (w < k && oracle::has_clique(g, w + 1))
                        ++w;
                    auto inst = build_empty_star_gadget(g, k, mu);
                    auto v = solve_max_empty_star(inst.points).volume;
                    EXPECT_EQ(v, *inst.params.V / rat_pow(mu, k - w)) << "n=" << n << " k=" << k << " w=" << w;
                    EXPECT_LE(v, oracle::has_clique(g, k) ? *inst.params.V : *inst.params.V / mu);
                }
}
