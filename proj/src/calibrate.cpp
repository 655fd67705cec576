#include <cmath>

#include <fmt/format.h>

#include "matchstick/solve.hpp"

namespace matchstick::solve {

namespace {

std::optional<Turn>* sign_slot(Step& step) {
    if (auto* s = std::get_if<AngleEdge>(&step)) return &s->turn;
    if (auto* s = std::get_if<Apex>(&step)) return &s->side;
    return nullptr;
}

std::optional<Turn> stored_sign(const Step& step) {
    if (const auto* s = std::get_if<AngleEdge>(&step)) return s->turn;
    if (const auto* s = std::get_if<Apex>(&step)) return s->side;
    return std::nullopt;
}

bool is_oriented(const Step& step) {
    return std::holds_alternative<AngleEdge>(step) || std::holds_alternative<Apex>(step);
}

bool is_violation(geom::SegmentRelation r) {
    return r == geom::SegmentRelation::ProperCrossing || r == geom::SegmentRelation::EndpointOnInterior ||
           r == geom::SegmentRelation::CollinearOverlap;
}

// Checks only what the last step added: its points against every vertex
// and its edges against every edge.
bool prefix_ok(const Embedding& e, std::size_t points_before, std::size_t edges_before, double floor) {
    const auto& pts = e.coords();
    for (std::size_t i = points_before; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i && geom::distance(pts[i], pts[j]) < floor) return false;
        }
    }
    const auto edges = e.edge_indices();
    for (std::size_t i = edges_before; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (j == i) continue;
            const auto rel = geom::segment_relation(pts[edges[i].first], pts[edges[i].second],
                                                    pts[edges[j].first], pts[edges[j].second]);
            if (is_violation(rel)) return false;
        }
    }
    return true;
}

class Search {
public:
    Search(const Construction& c, const CalibrationOptions& opts) : c_(c), opts_(opts) {}

    std::vector<SignVector> run() {
        Executor root(c_, {});
        SignVector signs;
        descend(std::move(root), signs);
        return std::move(accepted_);
    }

private:
    void descend(Executor ex, SignVector& signs) {
        const std::size_t depth = signs.size();
        while (!ex.finished()) {
            const Step& step = ex.peek();
            const bool oriented = is_oriented(step);
            const auto fixed = stored_sign(step);
            if (oriented && !fixed) {
                for (Turn t : {Turn::Ccw, Turn::Cw}) {
                    Executor branch = ex;
                    if (!advance(branch, t)) continue;
                    signs.push_back(t);
                    descend(std::move(branch), signs);
                    signs.pop_back();
                }
                signs.resize(depth);
                return;
            }
            if (!advance(ex, std::nullopt)) {
                signs.resize(depth);
                return;
            }
            if (oriented) signs.push_back(*fixed);
        }
        accept(signs);
        signs.resize(depth);
    }

    bool advance(Executor& ex, std::optional<Turn> t) {
        const std::size_t points_before = ex.embedding().size();
        const std::size_t edges_before = ex.embedding().edges().size();
        try {
            ex.apply_next(t);
        } catch (const ConstructionError& err) {
            if (err.kind() == ConstructionError::Kind::ApexInfeasible ||
                err.kind() == ConstructionError::Kind::CopyAnchorMismatch ||
                err.kind() == ConstructionError::Kind::Degenerate) {
                return false;
            }
            throw;
        }
        return prefix_ok(ex.embedding(), points_before, edges_before, opts_.coincidence_floor);
    }

    void accept(const SignVector& signs) {
        if (!opts_.require_verify) {
            accepted_.push_back(signs);
            return;
        }
        const Construction full = with_signs(c_, signs);
        try {
            SolveResult r;
            const Embedding e = execute_at_solved(full, &r);
            if (opts_.expected_value && std::abs(r.value - *opts_.expected_value) > opts_.expected_tol) return;
            if (!graphcheck::verify(e, opts_.verify_config).passed) return;
        } catch (const SolveError&) {
            return;
        } catch (const ConstructionError&) {
            return;
        }
        accepted_.push_back(signs);
    }

    const Construction& c_;
    const CalibrationOptions& opts_;
    std::vector<SignVector> accepted_;
};

}  // namespace

Construction with_signs(const Construction& c, const SignVector& signs) {
    Construction out = c;
    std::size_t k = 0;
    for (auto& ls : out.steps) {
        if (auto* slot = sign_slot(ls.step)) {
            if (k >= signs.size()) throw std::invalid_argument("too few signs for construction");
            *slot = signs[k++];
        }
    }
    if (k != signs.size()) throw std::invalid_argument("too many signs for construction");
    return out;
}

std::vector<SignVector> calibrate_orientations(const Construction& skeleton, const CalibrationOptions& opts) {
    auto found = Search(skeleton, opts).run();
    if (found.empty()) {
        throw SolveError(SolveError::Kind::NoAssignmentFound, "no orientation assignment satisfies the constraints");
    }
    return found;
}

}  // namespace matchstick::solve
