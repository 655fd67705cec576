#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "matchstick/construct.hpp"

namespace matchstick {

namespace {

constexpr double kCopyMatchTol = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

ParamValues Construction::default_params() const {
    ParamValues out;
    for (const auto& [name, p] : parameters) out[name] = p.default_value;
    return out;
}

const SolveDirective* Construction::solve_directive() const {
    for (const auto& ls : steps) {
        if (const auto* s = std::get_if<SolveDirective>(&ls.step)) return s;
    }
    return nullptr;
}

int Construction::oriented_step_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const LocatedStep& ls) {
        return std::holds_alternative<AngleEdge>(ls.step) || std::holds_alternative<Apex>(ls.step);
    }));
}

ParamValues resolve_params(const Construction& c, const ParamValues& overrides) {
    ParamValues values = c.default_params();
    for (const auto& [name, v] : overrides) {
        if (!c.parameters.contains(name)) {
            throw ConstructionError(ConstructionError::Kind::UnknownParameter,
                                    fmt::format("unknown parameter '{}'", name));
        }
        values[name] = v;
    }
    for (const auto& [name, v] : values) {
        const Parameter& p = c.parameters.at(name);
        if (!std::isfinite(v) || v < p.lo || v > p.hi) {
            throw ConstructionError(
                ConstructionError::Kind::ParameterOutOfRange,
                fmt::format("parameter '{}' = {} outside [{}, {}]", name, v, p.lo, p.hi));
        }
    }
    return values;
}

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

bool Embedding::has_point(std::string_view id) const { return index_.contains(std::string(id)); }

std::size_t Embedding::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw std::out_of_range(fmt::format("no point '{}'", id));
    return it->second;
}

const Coord& Embedding::at(std::string_view id) const { return coords_[index_of(id)]; }

void Embedding::add_point(const PointId& id, Coord c) {
    if (has_point(id)) throw std::invalid_argument(fmt::format("point '{}' already placed", id));
    index_.emplace(id, ids_.size());
    ids_.push_back(id);
    coords_.push_back(c);
}

bool Embedding::has_edge(std::string_view a, std::string_view b) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
        return (e.a == a && e.b == b) || (e.a == b && e.b == a);
    });
}

void Embedding::add_edge(const PointId& a, const PointId& b, bool closing) {
    if (!has_point(a) || !has_point(b)) {
        throw std::invalid_argument(fmt::format("edge {}-{} references a missing point", a, b));
    }
    if (a == b) throw std::invalid_argument(fmt::format("self loop at '{}'", a));
    if (has_edge(a, b)) {
        throw ConstructionError(ConstructionError::Kind::DuplicateEdge,
                                fmt::format("duplicate edge {}-{}", a, b));
    }
    edges_.push_back({a, b, closing});
}

std::vector<std::pair<std::size_t, std::size_t>> Embedding::edge_indices() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(index_of(e.a), index_of(e.b));
    return out;
}

const Edge* Embedding::closing_edge() const {
    for (const auto& e : edges_) {
        if (e.closing) return &e;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Executor
// ---------------------------------------------------------------------------

Executor::Executor(const Construction& c, ParamValues params)
    : construction_(&c), params_(resolve_params(c, params)) {
    embedding_.params = params_;
}

double Executor::angle_value(const AngleRef& a) const {
    if (const auto* v = std::get_if<double>(&a)) return *v;
    const auto& name = std::get<std::string>(a);
    auto it = params_.find(name);
    if (it == params_.end()) {
        throw ConstructionError(ConstructionError::Kind::UnknownParameter,
                                fmt::format("undeclared parameter '{}'", name));
    }
    return it->second;
}

std::size_t Executor::apply_next() { return apply_next(std::nullopt); }

std::size_t Executor::apply_next(std::optional<Turn> turn_override) {
    const LocatedStep& ls = construction_->steps.at(next_);
    const int line = ls.line;
    Embedding& e = embedding_;
    const std::size_t edges_before = e.edges().size();

    auto require_turn = [&](std::optional<Turn> stored) {
        if (turn_override) return *turn_override;
        if (!stored) {
            throw ConstructionError(ConstructionError::Kind::UnresolvedOrientation,
                                    fmt::format("line {}: orientation not resolved", line));
        }
        return *stored;
    };

    std::visit(
        overloaded{
            [&](const InitialPoints& s) {
                e.add_point(s.p, {0.0, 0.0});
                e.add_point(s.q, {1.0, 0.0});
                e.add_edge(s.p, s.q);
            },
            [&](const PlainEdge& s) { e.add_edge(s.a, s.b); },
            [&](const AngleEdge& s) {
                const Turn t = require_turn(s.turn);
                Coord p;
                try {
                    p = geom::place_by_angle(e.at(s.base), e.at(s.ref), angle_value(s.angle), t);
                } catch (const geom::GeometryError& err) {
                    throw ConstructionError(ConstructionError::Kind::Degenerate,
                                            fmt::format("line {}: {}", line, err.what()));
                }
                e.add_point(s.fresh, p);
                e.add_edge(s.fresh, s.base);
            },
            [&](const Apex& s) {
                const Turn t = require_turn(s.side);
                const Coord a = e.at(s.base_a);
                const Coord b = e.at(s.base_b);
                std::vector<Coord> hits;
                try {
                    hits = geom::circle_circle_intersection(a, 1.0, b, 1.0);
                } catch (const geom::GeometryError& err) {
                    throw ConstructionError(
                        ConstructionError::Kind::ApexInfeasible,
                        fmt::format("line {}: apex {} over {},{} infeasible (base {:.6f}): {}", line,
                                    s.fresh, s.base_a, s.base_b, geom::distance(a, b), err.what()));
                }
                const Coord p = (hits.size() == 1 || t == Turn::Ccw) ? hits[0] : hits[1];
                e.add_point(s.fresh, p);
                e.add_edge(s.fresh, s.base_a);
                e.add_edge(s.fresh, s.base_b);
            },
            [&](const Copy& s) {
                const Coord center = geom::midpoint(e.at(s.anchor_a), e.at(s.anchor_b));
                std::unordered_map<std::string, std::string> map(s.mapping.begin(), s.mapping.end());
                // Images are computed from the pre-copy coordinates.
                std::vector<std::pair<PointId, Coord>> images;
                for (const auto& src : s.sources) {
                    images.emplace_back(map.at(src), geom::point_reflect(e.at(src), center));
                }
                for (const auto& [target, image] : images) {
                    if (e.has_point(target)) {
                        const double gap = geom::distance(e.at(target), image);
                        if (gap > kCopyMatchTol) {
                            throw ConstructionError(
                                ConstructionError::Kind::CopyAnchorMismatch,
                                fmt::format("line {}: copied point lands {:.3e} away from existing {}", line,
                                            gap, target));
                        }
                    } else {
                        e.add_point(target, image);
                    }
                }
                // Only edges present before this step are copied.
                const std::vector<Edge> existing = e.edges();
                for (const auto& edge : existing) {
                    auto ia = map.find(edge.a);
                    auto ib = map.find(edge.b);
                    if (ia == map.end() || ib == map.end()) continue;
                    if (e.has_edge(ia->second, ib->second)) continue;
                    e.add_edge(ia->second, ib->second, edge.closing);
                }
            },
            [&](const ClosingEdge& s) { e.add_edge(s.a, s.b, true); },
            [&](const SolveDirective&) {},
        },
        ls.step);

    ++next_;
    return e.edges().size() - edges_before;
}

Embedding execute(const Construction& c, const ParamValues& params) {
    Executor ex(c, params);
    while (!ex.finished()) ex.apply_next();
    return std::move(ex).take();
}

}  // namespace matchstick
