#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "matchstick/construct.hpp"
#include "matchstick/graphcheck.hpp"

using namespace matchstick;

namespace {

std::set<std::string> neighbours(const Embedding& e, const std::string& id) {
    std::set<std::string> out;
    for (const auto& edge : e.edges()) {
        if (edge.a == id) out.insert(edge.b);
        if (edge.b == id) out.insert(edge.a);
    }
    return out;
}

bool in_first_half(const std::string& id) {
    const int k = std::stoi(id.substr(1));
    return k >= 1 && k <= 27;
}

ConstructionError::Kind execute_error(const Construction& c, const ParamValues& p = {}) {
    try {
        execute(c, p);
    } catch (const ConstructionError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "execute succeeded";
    return ConstructionError::Kind::Degenerate;
}

}  // namespace

TEST(Execute, MinimalScript) {
    const auto e = execute(parse_script("points A B\nangle_edge C base A ref B angle 90 turn +\n"));
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e.at("A"), (Coord{0, 0}));
    EXPECT_EQ(e.at("B"), (Coord{1, 0}));
    EXPECT_NEAR(e.at("C").x, 0.0, 1e-15);
    EXPECT_NEAR(e.at("C").y, 1.0, 1e-15);
    EXPECT_EQ(e.edges().size(), 2u);
}

TEST(Execute, ApexPicksSide) {
    const auto up = execute(parse_script("points A B\napex C over A B side +\n"));
    const auto down = execute(parse_script("points A B\napex C over A B side -\n"));
    EXPECT_NEAR(up.at("C").y, std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_NEAR(down.at("C").y, -std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_TRUE(up.has_edge("C", "A"));
    EXPECT_TRUE(up.has_edge("C", "B"));
}

TEST(Execute, ApexInfeasible) {
    // C = (2, 0); D on the unit circle about A with |CD| = 2.5, i.e.
    // cos(angle) = (1 + 4 - 6.25) / 4.
    const double angle = std::acos(-0.3125) * 180.0 / std::numbers::pi;
    const std::string head = "points A B\n"
                             "angle_edge C base B ref A angle 180 turn +\n"
                             "angle_edge D base A ref B angle " + fmt::format("{:.17g}", angle) + " turn +\n";
    const auto probe = execute(parse_script(head));
    ASSERT_NEAR(geom::distance(probe.at("C"), probe.at("D")), 2.5, 1e-12);
    EXPECT_EQ(execute_error(parse_script(head + "apex X over C D side +\n")), ConstructionError::Kind::ApexInfeasible);
}

TEST(Execute, ParameterChecks) {
    const auto c = parse_script("param t = 30 in 10 50\npoints A B\nangle_edge C base A ref B angle t turn +\n");
    EXPECT_EQ(execute_error(c, {{"t", 60}}), ConstructionError::Kind::ParameterOutOfRange);
    EXPECT_EQ(execute_error(c, {{"s", 20}}), ConstructionError::Kind::UnknownParameter);
    const auto e = execute(c, {{"t", 45}});
    EXPECT_NEAR(geom::angle_deg(e.at("C"), e.at("A"), e.at("B")), 45.0, 1e-12);
    EXPECT_EQ(e.params.at("t"), 45.0);
}

TEST(Execute, UnresolvedOrientation) {
    EXPECT_EQ(execute_error(parse_script("points A B\napex C over A B side ?\n")),
              ConstructionError::Kind::UnresolvedOrientation);
}

TEST(Execute, CopyAnchorMismatch) {
    // Reflecting about midpoint(A, C) sends A to C, but the mapping claims A -> B.
    const auto c = parse_script(
        "points A B\n"
        "apex C over A B side +\n"
        "copy A B C about A C map A=B B=X C=C\n");
    EXPECT_EQ(execute_error(c), ConstructionError::Kind::CopyAnchorMismatch);
}

TEST(Execute, CopyAddsReflectedPointsAndEdges) {
    const auto e = execute(parse_script(
        "points A B\n"
        "apex C over A B side +\n"
        "copy A B C about A C map A=C C=A B=D\n"));
    ASSERT_EQ(e.size(), 4u);
    // D is B rotated 180 degrees about the midpoint of A and C.
    const Coord mid = geom::midpoint(e.at("A"), e.at("C"));
    EXPECT_NEAR(e.at("D").x, 2 * mid.x - 1.0, 1e-15);
    EXPECT_NEAR(e.at("D").y, 2 * mid.y, 1e-15);
    // A-B, C-A, C-B copied to C-D, A-C (already present), A-D.
    EXPECT_EQ(e.edges().size(), 5u);
    EXPECT_TRUE(e.has_edge("C", "D"));
    EXPECT_TRUE(e.has_edge("A", "D"));
}

TEST(Builtin, CountsAtDefault) {
    const auto e = execute(builtin_graph54(), {{"mu", 38.0}});
    EXPECT_EQ(e.size(), 54u);
    EXPECT_EQ(e.edges().size(), 81u);
    ASSERT_NE(e.closing_edge(), nullptr);
    EXPECT_EQ(e.closing_edge()->a, "P53");
    EXPECT_EQ(e.closing_edge()->b, "P54");
    const double closing = geom::distance(e.at("P53"), e.at("P54"));
    EXPECT_NEAR(closing, 1.0007, 5e-4);
}

TEST(Builtin, FirstHalfHas38UnitEdges) {
    // Tally of the construction sentences up to P27: the initial edge, one
    // edge per angle-anchored step (alpha..nu: 13) and two per isosceles
    // triangle (P7, P8, P10, P13, P14, P17, P18, P21, P22, P23, P24, P27: 12).
    const int tally = 1 + 13 * 1 + 12 * 2;
    ASSERT_EQ(tally, 38);
    const auto e = execute(builtin_graph54());
    int inside = 0;
    for (const auto& edge : e.edges()) inside += (in_first_half(edge.a) && in_first_half(edge.b)) ? 1 : 0;
    EXPECT_EQ(inside, tally);
}

TEST(Builtin, EdgesAtSharedAnchors) {
    // sigma(P16) = P43 and sigma(P27) = P52, so the copies of P16-P26 and
    // P27-P26 land on P25.
    const auto e = execute(builtin_graph54());
    EXPECT_EQ(neighbours(e, "P25"), (std::set<std::string>{"P19", "P43", "P52"}));
    EXPECT_EQ(neighbours(e, "P26"), (std::set<std::string>{"P16", "P46", "P27"}));
    EXPECT_EQ(neighbours(e, "P53"), (std::set<std::string>{"P47", "P27", "P54"}));
    EXPECT_EQ(neighbours(e, "P54"), (std::set<std::string>{"P20", "P52", "P53"}));
}

TEST(Builtin, ExecuteIsBitIdentical) {
    const auto c = builtin_graph54();
    const auto a = execute(c, {{"mu", 38.3}});
    const auto b = execute(c, {{"mu", 38.3}});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.ids()[i], b.ids()[i]);
        EXPECT_EQ(a.coords()[i], b.coords()[i]);
    }
}

TEST(Builtin, InvariantsAcrossParameterRange) {
    const auto c = builtin_graph54();
    for (int i = 0; i <= 40; ++i) {
        const double mu = 37.0 + 0.05 * i;
        const auto e = execute(c, {{"mu", mu}});
        SCOPED_TRACE(mu);

        int closing = 0;
        for (const auto& edge : e.edges()) {
            const double len = geom::distance(e.at(edge.a), e.at(edge.b));
            if (edge.closing) {
                ++closing;
            } else {
                ASSERT_NEAR(len, 1.0, 1e-9) << edge.a << "-" << edge.b;
            }
        }
        EXPECT_EQ(closing, 1);
        EXPECT_EQ(graphcheck::degrees(e), (graphcheck::DegreeHistogram{{3, 54}}));

        // Copied points reflect back onto their sources.
        const Coord center = geom::midpoint(e.at("P25"), e.at("P26"));
        for (int k = 1; k <= 24; ++k) {
            const Coord back = geom::point_reflect(e.at("P" + std::to_string(k + 27)), center);
            const Coord& src = e.at("P" + std::to_string(k));
            ASSERT_NEAR(back.x, src.x, 1e-12);
            ASSERT_NEAR(back.y, src.y, 1e-12);
        }
        const Coord back27 = geom::point_reflect(e.at("P52"), center);
        ASSERT_NEAR(geom::distance(back27, e.at("P27")), 0.0, 1e-12);
    }
}

TEST(Builtin, AngleEdgesAreUnitFromBase) {
    const auto c = builtin_graph54();
    const auto e = execute(c);
    for (const auto& ls : c.steps) {
        if (const auto* s = std::get_if<AngleEdge>(&ls.step)) {
            EXPECT_NEAR(geom::distance(e.at(s->fresh), e.at(s->base)), 1.0, 1e-12) << s->fresh;
        }
    }
}

TEST(Builtin, FixedAnglesUnaffectedByMu) {
    // Every angle-anchored step other than mu keeps its angle as mu varies.
    const auto c = builtin_graph54();
    for (double mu : {37.0, 38.0, 39.0}) {
        const auto e = execute(c, {{"mu", mu}});
        for (const auto& ls : c.steps) {
            const auto* s = std::get_if<AngleEdge>(&ls.step);
            if (s == nullptr) continue;
            const auto& name = std::get<std::string>(s->angle);
            const double want = name == "mu" ? mu : c.parameters.at(name).default_value;
            EXPECT_NEAR(geom::angle_deg(e.at(s->fresh), e.at(s->base), e.at(s->ref)), want, 1e-9) << name;
        }
    }
}
