#pragma once

#include <stdexcept>
#include <string>

#include "matchstick/construct.hpp"

namespace matchstick::render {

struct RenderOptions {
    double scale = 60.0;  // pixels per unit length
    bool show_labels = false;
    std::string edge_color = "gray";
    std::string closing_color = "gray";
    std::string vertex_color = "red";
    double vertex_radius = 3.0;
    double edge_width = 1.5;
    double margin = 20.0;
};

class EmptyEmbedding : public std::invalid_argument {
public:
    EmptyEmbedding() : std::invalid_argument("cannot render an empty embedding") {}
};

/// SVG 1.1 drawing: one <line> per edge, one <circle> per vertex, and a
/// <text> per vertex when labels are on. Mathematical y points up.
std::string render_svg(const Embedding& e, const RenderOptions& opts = {});

}  // namespace matchstick::render
