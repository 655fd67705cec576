#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "matchstick/geom.hpp"

namespace matchstick {

using PointId = std::string;
using geom::Coord;
using geom::Turn;

// ---------------------------------------------------------------------------
// Steps
// ---------------------------------------------------------------------------

/// A literal angle in degrees or the name of a declared parameter.
using AngleRef = std::variant<double, std::string>;

/// Places `p` at (0,0) and `q` at (1,0) joined by a unit edge.
struct InitialPoints {
    PointId p;
    PointId q;
};

/// Unit edge between two already placed points; its length is checked, not enforced.
struct PlainEdge {
    PointId a;
    PointId b;
};

/// New point at unit distance from `base`, with the angle at `base` between
/// the new edge and base->ref given by `angle`.
struct AngleEdge {
    PointId fresh;
    PointId base;
    PointId ref;
    AngleRef angle;
    std::optional<Turn> turn;  // nullopt: unresolved, to be calibrated
};

/// Apex of the unit isosceles triangle over (base_a, base_b). Adds two
/// edges; the base stays open.
struct Apex {
    PointId fresh;
    PointId base_a;
    PointId base_b;
    std::optional<Turn> side;
};

/// Point reflection of `sources` about midpoint(anchor_a, anchor_b),
/// relabelled through `mapping`, together with every source-internal edge.
struct Copy {
    std::vector<PointId> sources;
    std::vector<std::pair<PointId, PointId>> mapping;  // in source order
    PointId anchor_a;
    PointId anchor_b;
};

/// Edge of initially unknown length.
struct ClosingEdge {
    PointId a;
    PointId b;
};

struct SolveDirective {
    std::string parameter;
    double target = 1.0;
    double lo = 0.0;
    double hi = 0.0;
};

using Step = std::variant<InitialPoints, PlainEdge, AngleEdge, Apex, Copy, ClosingEdge, SolveDirective>;

/// Source line of a step, for diagnostics.
struct LocatedStep {
    Step step;
    int line = 0;
};

struct Parameter {
    double default_value = 0.0;
    double lo = 0.0;
    double hi = 360.0;
};

/// Involutive relabelling realised by a point reflection about the
/// midpoint of two anchors.
struct Symmetry {
    PointId anchor_a;
    PointId anchor_b;
    std::map<PointId, PointId> mapping;
};

struct Metadata {
    std::map<std::string, std::vector<PointId>> rigid_parts;
    std::optional<Symmetry> symmetry;
};

struct Construction {
    std::vector<LocatedStep> steps;
    std::map<std::string, Parameter> parameters;
    Metadata metadata;

    /// Parameter values with every default filled in.
    std::map<std::string, double> default_params() const;
    const SolveDirective* solve_directive() const;
    /// Number of steps carrying an orientation sign (AngleEdge, Apex).
    int oriented_step_count() const;
};

using ParamValues = std::map<std::string, double>;

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

struct Edge {
    PointId a;
    PointId b;
    bool closing = false;
};

/// Point coordinates (in insertion order) plus the edge list.
class Embedding {
public:
    bool has_point(std::string_view id) const;
    const Coord& at(std::string_view id) const;
    std::size_t index_of(std::string_view id) const;

    void add_point(const PointId& id, Coord c);
    void add_edge(const PointId& a, const PointId& b, bool closing = false);
    bool has_edge(std::string_view a, std::string_view b) const;

    const std::vector<PointId>& ids() const { return ids_; }
    const std::vector<Coord>& coords() const { return coords_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    /// Edge endpoints as indices into ids()/coords().
    std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;
    const Edge* closing_edge() const;

    /// Parameter values the embedding was built with (informational).
    ParamValues params;

private:
    std::vector<PointId> ids_;
    std::vector<Coord> coords_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class ScriptError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownPoint, DuplicatePoint, UndeclaredParameter, Invalid };

    ScriptError(Kind kind, int line, const std::string& message);
    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

class ConstructionError : public std::runtime_error {
public:
    enum class Kind {
        ApexInfeasible,
        CopyAnchorMismatch,
        ParameterOutOfRange,
        UnknownParameter,
        UnresolvedOrientation,
        DuplicateEdge,
        Degenerate,
    };

    ConstructionError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// ---------------------------------------------------------------------------
// Parsing and execution
// ---------------------------------------------------------------------------

Construction parse_script(std::string_view text);
Construction load_script(const std::string& path);

/// Checks a parameter assignment against the declared ranges and fills
/// in defaults. Throws ConstructionError.
ParamValues resolve_params(const Construction& c, const ParamValues& overrides);

/// Applies construction steps one at a time; used directly by the
/// orientation search to examine partial embeddings.
class Executor {
public:
    Executor(const Construction& c, ParamValues params);

    /// Applies the next step. Returns the number of edges it added.
    std::size_t apply_next();
    /// Applies the next step using `turn` in place of its stored sign.
    std::size_t apply_next(std::optional<Turn> turn_override);
    bool finished() const { return next_ >= construction_->steps.size(); }
    std::size_t position() const { return next_; }
    const Step& peek() const { return construction_->steps[next_].step; }

    const Embedding& embedding() const { return embedding_; }
    Embedding take() && { return std::move(embedding_); }

private:
    double angle_value(const AngleRef& a) const;

    const Construction* construction_;
    ParamValues params_;
    std::size_t next_ = 0;
    Embedding embedding_;
};

/// Runs every step. `params` overrides defaults by name.
Embedding execute(const Construction& c, const ParamValues& params = {});

/// The bundled 54-vertex 3-regular girth-5 construction.
Construction builtin_graph54();
std::string_view builtin_graph54_script();

}  // namespace matchstick
