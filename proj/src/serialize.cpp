#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "matchstick/serialize.hpp"

namespace matchstick::io {

Json embedding_to_json(const Embedding& e, const std::optional<Symmetry>& symmetry) {
    Json j;
    Json points = Json::object();
    for (std::size_t i = 0; i < e.size(); ++i) {
        points[e.ids()[i]] = Json::array({e.coords()[i].x, e.coords()[i].y});
    }
    j["points"] = std::move(points);

    Json edges = Json::array();
    Json closing = nullptr;
    for (const auto& edge : e.edges()) {
        edges.push_back(Json::array({edge.a, edge.b}));
        if (edge.closing) closing = Json::array({edge.a, edge.b});
    }
    j["edges"] = std::move(edges);
    j["closing"] = std::move(closing);

    Json params = Json::object();
    for (const auto& [name, v] : e.params) params[name] = v;
    j["params"] = std::move(params);

    if (symmetry) {
        Json mapping = Json::object();
        for (const auto& [from, to] : symmetry->mapping) mapping[from] = to;
        j["symmetry"] = {{"anchors", Json::array({symmetry->anchor_a, symmetry->anchor_b})},
                         {"mapping", std::move(mapping)}};
    }
    return j;
}

namespace {

std::pair<std::string, std::string> id_pair(const Json& j, std::string_view what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw std::runtime_error(fmt::format("embedding JSON: {} must be a pair of point ids", what));
    }
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

LoadedEmbedding embedding_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("edges")) {
        throw std::runtime_error("embedding JSON: expected an object with 'points' and 'edges'");
    }
    LoadedEmbedding out;
    Embedding& e = out.embedding;
    for (const auto& [id, xy] : j.at("points").items()) {
        if (!xy.is_array() || xy.size() != 2 || !xy[0].is_number() || !xy[1].is_number()) {
            throw std::runtime_error(fmt::format("embedding JSON: point '{}' must be [x, y]", id));
        }
        const Coord c{xy[0].get<double>(), xy[1].get<double>()};
        if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
            throw std::runtime_error(fmt::format("embedding JSON: point '{}' is not finite", id));
        }
        e.add_point(id, c);
    }

    std::optional<std::pair<std::string, std::string>> closing;
    if (j.contains("closing") && !j.at("closing").is_null()) closing = id_pair(j.at("closing"), "closing");

    try {
        for (const auto& item : j.at("edges")) {
            auto [a, b] = id_pair(item, "edge");
            const bool is_closing = closing && ((closing->first == a && closing->second == b) ||
                                                (closing->first == b && closing->second == a));
            e.add_edge(a, b, is_closing);
        }
        if (closing && !e.has_edge(closing->first, closing->second)) {
            e.add_edge(closing->first, closing->second, true);
        }
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(fmt::format("embedding JSON: {}", err.what()));
    } catch (const ConstructionError& err) {
        throw std::runtime_error(fmt::format("embedding JSON: {}", err.what()));
    }

    if (j.contains("params")) {
        for (const auto& [name, v] : j.at("params").items()) e.params[name] = v.get<double>();
    }

    if (j.contains("symmetry")) {
        const Json& s = j.at("symmetry");
        Symmetry sym;
        std::tie(sym.anchor_a, sym.anchor_b) = id_pair(s.at("anchors"), "symmetry anchors");
        for (const auto& [from, to] : s.at("mapping").items()) sym.mapping[from] = to.get<std::string>();
        for (const auto& id : {sym.anchor_a, sym.anchor_b}) {
            if (!e.has_point(id)) throw std::runtime_error(fmt::format("embedding JSON: unknown anchor '{}'", id));
        }
        out.symmetry = std::move(sym);
    }
    return out;
}

Json report_to_json(const graphcheck::VerificationReport& r) {
    Json j;
    j["vertex_count"] = r.vertex_count;
    j["edge_count"] = r.edge_count;
    Json hist = Json::object();
    for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
    j["degree_histogram"] = std::move(hist);
    j["girth"] = r.girth == graphcheck::kAcyclic ? Json(nullptr) : Json(r.girth);
    j["max_unit_deviation"] = r.max_unit_deviation;
    j["closing_length"] = r.closing_length ? Json(*r.closing_length) : Json(nullptr);
    Json crossings = Json::array();
    for (const auto& c : r.crossings) {
        crossings.push_back({{"edge_a", {c.a1, c.a2}}, {"edge_b", {c.b1, c.b2}}, {"kind", geom::to_string(c.kind)}});
    }
    j["crossings"] = std::move(crossings);
    j["min_clearance"] = std::isfinite(r.min_clearance) ? Json(r.min_clearance) : Json(nullptr);
    j["symmetry_residual"] = r.symmetry_residual ? Json(*r.symmetry_residual) : Json(nullptr);
    j["passed"] = r.passed;
    return j;
}

Json solve_result_to_json(const solve::SolveResult& r) {
    Json j;
    j["param_name"] = r.param_name;
    j["value"] = r.value;
    j["value_deg"] = fmt::format("{:.12f}", r.value);
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["bracket_lo"] = r.bracket_lo;
    j["bracket_hi"] = r.bracket_hi;
    j["sign_changes"] = r.sign_changes;
    Json history = Json::array();
    for (const auto& b : r.history) history.push_back(Json::array({b.lo, b.hi}));
    j["bracket_history"] = std::move(history);
    return j;
}

std::string sweep_to_csv(const std::vector<solve::SweepSample>& samples) {
    std::string out = "mu_deg,closing_length,min_clearance,crossings\n";
    for (const auto& s : samples) {
        out += fmt::format("{:.15g},{:.17g},{:.17g},{}\n", s.param_value, s.closing_length, s.min_clearance,
                           s.crossings_found ? 1 : 0);
    }
    return out;
}

}  // namespace matchstick::io
