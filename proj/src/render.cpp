#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "matchstick/render.hpp"

namespace matchstick::render {

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Embedding& e, const RenderOptions& opts) {
    if (e.empty()) throw EmptyEmbedding();
    if (!(opts.scale > 0.0)) throw std::invalid_argument("render scale must be positive");
    if (opts.vertex_radius < 0.0) throw std::invalid_argument("vertex radius must be non-negative");

    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -min_x;
    double min_y = min_x;
    double max_y = -min_x;
    for (const auto& c : e.coords()) {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
    }

    const double pad = opts.margin + opts.vertex_radius;
    const double width = (max_x - min_x) * opts.scale + 2.0 * pad;
    const double height = (max_y - min_y) * opts.scale + 2.0 * pad;
    auto px = [&](const Coord& c) { return (c.x - min_x) * opts.scale + pad; };
    auto py = [&](const Coord& c) { return (max_y - c.y) * opts.scale + pad; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.3f}\" height=\"{:.3f}\" "
        "viewBox=\"0 0 {:.3f} {:.3f}\">\n",
        width, height, width, height);

    out += fmt::format("<g stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\">\n", escape(opts.edge_color),
                       opts.edge_width);
    for (const auto& edge : e.edges()) {
        const Coord& a = e.at(edge.a);
        const Coord& b = e.at(edge.b);
        const std::string extra =
            edge.closing ? fmt::format(" class=\"closing\" stroke=\"{}\"", escape(opts.closing_color)) : "";
        out += fmt::format("<line x1=\"{:.9f}\" y1=\"{:.9f}\" x2=\"{:.9f}\" y2=\"{:.9f}\"{}/>\n", px(a), py(a),
                           px(b), py(b), extra);
    }
    out += "</g>\n";

    out += fmt::format("<g fill=\"{}\">\n", escape(opts.vertex_color));
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Coord& c = e.coords()[i];
        out += fmt::format("<circle id=\"{}\" cx=\"{:.9f}\" cy=\"{:.9f}\" r=\"{}\"/>\n", escape(e.ids()[i]), px(c),
                           py(c), opts.vertex_radius);
    }
    out += "</g>\n";

    if (opts.show_labels) {
        out += "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"black\">\n";
        for (std::size_t i = 0; i < e.size(); ++i) {
            const Coord& c = e.coords()[i];
            out += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n", px(c) + opts.vertex_radius + 2.0,
                               py(c) - opts.vertex_radius - 2.0, escape(e.ids()[i]));
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace matchstick::render
