#include <algorithm>
#include <cmath>
#include <deque>

#include <fmt/format.h>

#include "matchstick/graphcheck.hpp"

namespace matchstick::graphcheck {

using geom::SegmentRelation;

DegreeHistogram degrees(const Embedding& e) {
    std::vector<int> deg(e.size(), 0);
    for (const auto& [a, b] : e.edge_indices()) {
        ++deg[a];
        ++deg[b];
    }
    DegreeHistogram hist;
    for (int d : deg) ++hist[d];
    return hist;
}

int girth(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int best = kAcyclic;
    std::vector<int> dist(n);
    std::vector<std::size_t> parent(n);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), kNone);
        std::deque<std::size_t> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            // No shorter cycle through root can be found past this depth.
            if (2 * dist[u] + 1 >= best) break;
            for (std::size_t v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

int girth(const Embedding& e) { return girth(e.size(), e.edge_indices()); }

UnitLengthReport unit_length_report(const Embedding& e) {
    UnitLengthReport r;
    for (const auto& edge : e.edges()) {
        const double len = geom::distance(e.at(edge.a), e.at(edge.b));
        if (edge.closing) {
            r.closing_length = len;
        } else {
            r.max_unit_deviation = std::max(r.max_unit_deviation, std::abs(len - 1.0));
        }
    }
    return r;
}

CrossingReport crossing_report(const Embedding& e, double tol) {
    CrossingReport r;
    const auto& pts = e.coords();
    const auto edges = e.edge_indices();
    const std::size_t n = pts.size();

    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) adjacent[a][b] = adjacent[b][a] = true;

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a1, a2] = edges[i];
            const auto [b1, b2] = edges[j];
            const auto rel = geom::segment_relation(pts[a1], pts[a2], pts[b1], pts[b2], tol);
            if (rel == SegmentRelation::Disjoint || rel == SegmentRelation::SharedEndpoint) continue;
            r.crossings.push_back({e.ids()[a1], e.ids()[a2], e.ids()[b1], e.ids()[b2], rel});
        }
    }

    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!adjacent[u][v]) r.min_clearance = std::min(r.min_clearance, geom::distance(pts[u], pts[v]));
        }
        for (const auto& [a, b] : edges) {
            if (u == a || u == b) continue;
            r.min_clearance = std::min(r.min_clearance, geom::point_segment_distance(pts[u], pts[a], pts[b]));
        }
    }
    return r;
}

double symmetry_residual(const Embedding& e, const Symmetry& s) {
    for (const auto& [from, to] : s.mapping) {
        auto back = s.mapping.find(to);
        const PointId& image_of_to = back == s.mapping.end() ? to : back->second;
        if (image_of_to != from) {
            throw MappingNotInvolution(
                fmt::format("symmetry mapping is not an involution: {} -> {} -> {}", from, to, image_of_to));
        }
    }
    const Coord center = geom::midpoint(e.at(s.anchor_a), e.at(s.anchor_b));
    double worst = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const PointId& id = e.ids()[i];
        auto it = s.mapping.find(id);
        const PointId& image = it == s.mapping.end() ? id : it->second;
        const Coord reflected = geom::point_reflect(e.coords()[i], center);
        worst = std::max(worst, geom::distance(reflected, e.at(image)));
    }
    return worst;
}

VerificationReport verify(const Embedding& e, const VerifyConfig& config,
                          const std::optional<Symmetry>& symmetry) {
    VerificationReport r;
    r.vertex_count = static_cast<int>(e.size());
    r.edge_count = static_cast<int>(e.edges().size());
    r.degree_histogram = degrees(e);
    r.girth = girth(e);

    const auto lengths = unit_length_report(e);
    r.max_unit_deviation = lengths.max_unit_deviation;
    r.closing_length = lengths.closing_length;

    auto crossing = crossing_report(e);
    r.crossings = std::move(crossing.crossings);
    r.min_clearance = crossing.min_clearance;

    if (symmetry) r.symmetry_residual = symmetry_residual(e, *symmetry);

    const bool regular = r.degree_histogram.size() == 1 &&
                         r.degree_histogram.begin()->first == config.expected_degree;
    const bool closing_ok =
        !r.closing_length || std::abs(*r.closing_length - 1.0) <= config.unit_tol;
    r.passed = r.vertex_count > 0 && regular && r.girth == config.expected_girth &&
               r.max_unit_deviation <= config.unit_tol && closing_ok && r.crossings.empty() &&
               r.min_clearance > config.clearance_floor;
    return r;
}

}  // namespace matchstick::graphcheck
