#ifndef CPERS_TOOLS_SVG_HPP
#define CPERS_TOOLS_SVG_HPP

#include <cpers/coloring.hpp>
#include <cpers/graph.hpp>

#include <array>
#include <sstream>
#include <string>

namespace cpers::cli {

// Columns left to right, rows top to bottom; the twisted closing edges are
// drawn as arcs under the grid.
inline std::string render_hpq_svg(std::size_t p, std::size_t q, const Coloring &c) {
    static constexpr std::array<const char *, 10> palette{"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                                          "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5"};
    const Graph g = build_hpq(p, q);
    const double dx = 90, dy = 70, margin = 50;
    const double width = margin * 2 + dx * double(q - 1);
    const double height = margin * 2 + dy * double(p - 1) + 30.0 * double(p);
    auto x_of = [&](std::size_t v) { return margin + dx * double(GridLabel::of(p, v).i - 1); };
    auto y_of = [&](std::size_t v) { return margin + dy * double(GridLabel::of(p, v).j); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (auto [u, v] : g.edges()) {
        const auto a = GridLabel::of(p, u), b = GridLabel::of(p, v);
        const bool twist = a.i == 1 && b.i == q && q > 2;
        const bool same_column = a.i == b.i;
        if (twist) {
            const double bottom = margin + dy * double(p - 1) + 30.0 * double(a.j + 1);
            svg << "<path d=\"M " << x_of(u) << ' ' << y_of(u) << " C " << x_of(u) << ' ' << bottom << ", "
                << x_of(v) << ' ' << bottom << ", " << x_of(v) << ' ' << y_of(v)
                << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
        } else if (same_column && b.j > a.j + 1) {
            // Bow non-adjacent clique edges so they do not overlap.
            const double bulge = x_of(u) + 12.0 * double(b.j - a.j);
            svg << "<path d=\"M " << x_of(u) << ' ' << y_of(u) << " Q " << bulge << ' ' << (y_of(u) + y_of(v)) / 2
                << ", " << x_of(v) << ' ' << y_of(v) << "\" fill=\"none\" stroke=\"#888\"/>\n";
        } else {
            svg << "<line x1=\"" << x_of(u) << "\" y1=\"" << y_of(u) << "\" x2=\"" << x_of(v) << "\" y2=\"" << y_of(v)
                << "\" stroke=\"#888\"/>\n";
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto color = c.colors[v];
        svg << "<circle cx=\"" << x_of(v) << "\" cy=\"" << y_of(v) << "\" r=\"13\" fill=\""
            << palette[color % palette.size()] << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << x_of(v) << "\" y=\"" << y_of(v) + 4
            << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">" << color << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace cpers::cli

#endif
