#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "matchstick/graphcheck.hpp"
#include "matchstick/solve.hpp"
#include "oracles.hpp"

using namespace matchstick;
using namespace matchstick::graphcheck;

namespace {

// Smallest gap between non-incident features of the bundled graph at the
// solved parameter, measured once with oracle::brute_force_clearance.
constexpr double kSolvedClearance = 0.01676740224454589;

Embedding polygon(int n) {
    Embedding e;
    const double r = 0.5 / std::sin(std::numbers::pi / n);
    for (int i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * i / n;
        e.add_point("V" + std::to_string(i), {r * std::cos(t), r * std::sin(t)});
    }
    for (int i = 0; i < n; ++i) e.add_edge("V" + std::to_string(i), "V" + std::to_string((i + 1) % n));
    return e;
}

Embedding from_edges(std::size_t n, const oracle::EdgeList& edges) {
    Embedding e;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * double(i) / double(n);
        e.add_point("V" + std::to_string(i), {std::cos(t), std::sin(t)});
    }
    for (auto [a, b] : edges) e.add_edge("V" + std::to_string(a), "V" + std::to_string(b));
    return e;
}

const Embedding& solved_graph() {
    static const Embedding e = solve::execute_at_solved(builtin_graph54());
    return e;
}

}  // namespace

TEST(Degrees, SmallGraphs) {
    Embedding single;
    single.add_point("A", {0, 0});
    single.add_point("B", {1, 0});
    single.add_edge("A", "B");
    EXPECT_EQ(degrees(single), (DegreeHistogram{{1, 2}}));
    EXPECT_EQ(degrees(polygon(3)), (DegreeHistogram{{2, 3}}));
}

TEST(Degrees, BundledGraphIsCubicAtAnyMu) {
    const auto c = builtin_graph54();
    for (double mu : {37.0, 38.0, 38.5, 39.0}) {
        const auto h = degrees(execute(c, {{"mu", mu}}));
        EXPECT_EQ(h, (DegreeHistogram{{3, 54}}));
    }
}

TEST(Degrees, SumIsTwiceEdgeCount) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto edges = oracle::random_graph(9, 0.4, rng);
        int sum = 0;
        for (const auto& [deg, count] : degrees(from_edges(9, edges))) sum += deg * count;
        EXPECT_EQ(sum, 2 * static_cast<int>(edges.size()));
    }
}

TEST(Girth, Examples) {
    const oracle::EdgeList k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    EXPECT_EQ(girth(4, k4), 3);
    EXPECT_EQ(girth(polygon(6)), 6);
    EXPECT_EQ(girth(polygon(4)), 4);
    EXPECT_EQ(girth(10, oracle::petersen()), 5);
    EXPECT_EQ(girth(4, {{0, 1}, {1, 2}, {1, 3}}), kAcyclic);
    EXPECT_EQ(girth(0, {}), kAcyclic);
    EXPECT_EQ(girth(solved_graph()), 5);
}

TEST(Girth, MatchesBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = size(rng);
        const auto edges = oracle::random_graph(n, density(rng), rng);
        ASSERT_EQ(girth(n, edges), oracle::brute_force_girth(n, edges)) << "graph " << i;
    }
}

TEST(UnitLength, Square) {
    const auto r = unit_length_report(polygon(4));
    EXPECT_NEAR(r.max_unit_deviation, 0.0, 1e-15);
    EXPECT_FALSE(r.closing_length);
}

TEST(UnitLength, BundledClosingEdge) {
    const auto at38 = unit_length_report(execute(builtin_graph54(), {{"mu", 38.0}}));
    ASSERT_TRUE(at38.closing_length);
    EXPECT_NEAR(*at38.closing_length, 1.0007, 5e-4);
    EXPECT_LE(at38.max_unit_deviation, 1e-9);

    const auto solved = unit_length_report(solved_graph());
    EXPECT_LE(solved.max_unit_deviation, 1e-9);
    EXPECT_NEAR(*solved.closing_length, 1.0, 1e-9);
}

TEST(Crossings, TwoCrossingSegments) {
    Embedding e;
    e.add_point("A", {0, 0});
    e.add_point("B", {std::sqrt(0.5), std::sqrt(0.5)});
    e.add_point("C", {0, std::sqrt(0.5)});
    e.add_point("D", {std::sqrt(0.5), 0});
    e.add_edge("A", "B");
    e.add_edge("C", "D");
    const auto r = crossing_report(e);
    ASSERT_EQ(r.crossings.size(), 1u);
    EXPECT_EQ(r.crossings[0].kind, geom::SegmentRelation::ProperCrossing);
    // Clearance is vertex to vertex and vertex to edge, so a crossing alone
    // does not drive it to zero.
    EXPECT_NEAR(r.min_clearance, 0.5, 1e-15);
}

TEST(Crossings, SolvedGraphClearanceMatchesBruteForce) {
    const auto& e = solved_graph();
    const auto r = crossing_report(e);
    EXPECT_TRUE(r.crossings.empty());

    std::vector<oracle::P2> pts;
    for (const auto& c : e.coords()) pts.push_back({c.x, c.y});
    const double brute = oracle::brute_force_clearance(pts, e.edge_indices());
    EXPECT_NEAR(r.min_clearance, brute, 1e-12);
    EXPECT_NEAR(r.min_clearance, kSolvedClearance, 1e-12);
}

TEST(Crossings, EndpointsOfParameterRange) {
    for (double mu : {37.0, 39.0}) {
        const auto r = crossing_report(execute(builtin_graph54(), {{"mu", mu}}));
        EXPECT_TRUE(r.crossings.empty()) << mu;
        EXPECT_GT(r.min_clearance, 1e-3) << mu;
    }
}

TEST(Crossings, InvariantUnderRigidMotionAndRelabeling) {
    const auto& e = solved_graph();
    const auto base = crossing_report(e);

    const double t = 0.7;
    const Coord shift{3.25, -1.5};
    Embedding moved;
    // Reverse insertion order and rename every vertex.
    for (std::size_t k = e.size(); k-- > 0;) {
        const Coord& p = e.coords()[k];
        moved.add_point("Q" + e.ids()[k], {std::cos(t) * p.x - std::sin(t) * p.y + shift.x,
                                           std::sin(t) * p.x + std::cos(t) * p.y + shift.y});
    }
    for (auto it = e.edges().rbegin(); it != e.edges().rend(); ++it) moved.add_edge("Q" + it->b, "Q" + it->a);
    const auto r = crossing_report(moved);
    EXPECT_EQ(r.crossings.size(), base.crossings.size());
    EXPECT_NEAR(r.min_clearance, base.min_clearance, 1e-12);

    // A drawing with a crossing keeps it under the same motion.
    Embedding x;
    x.add_point("A", {0, 0});
    x.add_point("B", {1, 1});
    x.add_point("C", {0, 1});
    x.add_point("D", {1, 0});
    x.add_edge("A", "B");
    x.add_edge("C", "D");
    Embedding xm;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const Coord& p = x.coords()[k];
        xm.add_point(x.ids()[k] + "'", {std::cos(t) * p.x - std::sin(t) * p.y + shift.x,
                                        std::sin(t) * p.x + std::cos(t) * p.y + shift.y});
    }
    xm.add_edge("B'", "A'");
    xm.add_edge("C'", "D'");
    EXPECT_EQ(crossing_report(xm).crossings.size(), 1u);
}

TEST(Symmetry, BundledGraphResidual) {
    const auto c = builtin_graph54();
    ASSERT_TRUE(c.metadata.symmetry);
    for (double mu : {37.0, 37.5, 38.0, 38.5, 39.0}) {
        EXPECT_LE(symmetry_residual(execute(c, {{"mu", mu}}), *c.metadata.symmetry), 1e-9) << mu;
    }
    EXPECT_LE(symmetry_residual(solved_graph(), *c.metadata.symmetry), 1e-9);
}

TEST(Symmetry, SmallCases) {
    Embedding e;
    e.add_point("P1", {0, 0});
    e.add_point("P2", {1, 0});
    e.add_edge("P1", "P2");
    EXPECT_EQ(symmetry_residual(e, {"P1", "P2", {{"P1", "P2"}, {"P2", "P1"}}}), 0.0);

    e.add_point("P3", {0.2, 0.9});
    // Identity mapping on an asymmetric drawing.
    EXPECT_GT(symmetry_residual(e, {"P1", "P2", {}}), 0.5);

    EXPECT_THROW(symmetry_residual(e, {"P1", "P2", {{"P1", "P2"}, {"P2", "P3"}, {"P3", "P1"}}}),
                 MappingNotInvolution);
}

TEST(Verify, SolvedGraphPasses) {
    const auto c = builtin_graph54();
    const auto r = verify(solved_graph(), {}, c.metadata.symmetry);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.vertex_count, 54);
    EXPECT_EQ(r.edge_count, 81);
    EXPECT_EQ(r.girth, 5);
    EXPECT_TRUE(r.crossings.empty());
    ASSERT_TRUE(r.symmetry_residual);
    EXPECT_LE(*r.symmetry_residual, 1e-9);
}

TEST(Verify, DefaultMuFailsOnClosingEdge) {
    const auto r = verify(execute(builtin_graph54(), {{"mu", 38.0}}));
    EXPECT_FALSE(r.passed);
    EXPECT_NEAR(*r.closing_length - 1.0, 7e-4, 2e-4);
    EXPECT_LE(r.max_unit_deviation, 1e-9);
    EXPECT_EQ(r.girth, 5);
}

TEST(Verify, UnitSquareFails) {
    const auto r = verify(polygon(4));
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.girth, 4);
    EXPECT_EQ(r.degree_histogram, (DegreeHistogram{{2, 4}}));
}

TEST(Verify, PetersenLikeCountsButNotMatchstick) {
    // Petersen graph drawn with unit-free coordinates: right degree and
    // girth, wrong lengths and crossings.
    const auto r = verify(from_edges(10, oracle::petersen()));
    EXPECT_EQ(r.degree_histogram, (DegreeHistogram{{3, 10}}));
    EXPECT_EQ(r.girth, 5);
    EXPECT_FALSE(r.crossings.empty());
    EXPECT_FALSE(r.passed);
}
