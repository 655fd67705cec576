#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matchstick/construct.hpp"

namespace matchstick::graphcheck {

/// Girth of a graph without cycles.
inline constexpr int kAcyclic = std::numeric_limits<int>::max();

using DegreeHistogram = std::map<int, int>;

struct Crossing {
    PointId a1, a2;
    PointId b1, b2;
    geom::SegmentRelation kind;
};

struct CrossingReport {
    std::vector<Crossing> crossings;
    double min_clearance = std::numeric_limits<double>::infinity();
};

struct UnitLengthReport {
    double max_unit_deviation = 0.0;
    std::optional<double> closing_length;
};

struct VerifyConfig {
    double unit_tol = 1e-9;
    double clearance_floor = 1e-6;
    int expected_degree = 3;
    int expected_girth = 5;
};

struct VerificationReport {
    int vertex_count = 0;
    int edge_count = 0;
    DegreeHistogram degree_histogram;
    int girth = kAcyclic;
    double max_unit_deviation = 0.0;
    std::optional<double> closing_length;
    std::vector<Crossing> crossings;
    double min_clearance = std::numeric_limits<double>::infinity();
    std::optional<double> symmetry_residual;
    bool passed = false;
};

class MappingNotInvolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DegreeHistogram degrees(const Embedding& e);

/// Shortest cycle length by breadth-first search from every vertex.
/// Works on any simple graph given as vertex count plus edge index pairs.
int girth(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
int girth(const Embedding& e);

UnitLengthReport unit_length_report(const Embedding& e);

/// Classifies every edge pair and measures the smallest gap between
/// non-incident features (vertex-vertex and vertex-edge).
CrossingReport crossing_report(const Embedding& e, double tol = geom::kCoincidenceTol);

/// Largest distance between the reflection of a vertex about
/// midpoint(anchor_a, anchor_b) and its image under `mapping`. Vertices
/// missing from `mapping` are treated as fixed.
double symmetry_residual(const Embedding& e, const Symmetry& s);

VerificationReport verify(const Embedding& e, const VerifyConfig& config = {},
                          const std::optional<Symmetry>& symmetry = std::nullopt);

}  // namespace matchstick::graphcheck
