#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchstick/construct.hpp"
#include "matchstick/graphcheck.hpp"
#include "matchstick/solve.hpp"

namespace matchstick::io {

using Json = nlohmann::ordered_json;

/// {"points": {"P1": [x, y], ...}, "edges": [["P1","P2"], ...],
///  "closing": ["P53","P54"], "params": {...}} plus an optional
/// "symmetry" object. Coordinates round-trip exactly.
Json embedding_to_json(const Embedding& e, const std::optional<Symmetry>& symmetry = std::nullopt);

struct LoadedEmbedding {
    Embedding embedding;
    std::optional<Symmetry> symmetry;
};

/// Throws std::runtime_error on malformed input.
LoadedEmbedding embedding_from_json(const Json& j);

Json report_to_json(const graphcheck::VerificationReport& r);
Json solve_result_to_json(const solve::SolveResult& r);

/// mu_deg,closing_length,min_clearance,crossings
std::string sweep_to_csv(const std::vector<solve::SweepSample>& samples);

}  // namespace matchstick::io
