#include "ldraw/render.hpp"

#include "ldraw/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ldraw {

namespace {

std::string num(double value) {
    if (value == 0.0) value = 0.0; // drop negative zero
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), ptr);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

int sign(int v) { return (v > 0) - (v < 0); }

} // namespace

void validate_style(const RenderStyle& style) {
    if (!(style.cell > 0) || !(style.vertex_radius > 0) || !(style.arrow_length > 0) || !(style.stroke_width > 0) ||
        !(style.font_size > 0))
        throw InvalidInput("render style measurements must be positive");
    if (!(style.junction_radius >= 0) || !(style.junction_radius < style.cell / 2))
        throw InvalidInput("junction radius must lie in [0, cell/2)");
}

std::string render_svg(const DirectedGraph& g, const Layout& layout, const RenderStyle& style) {
    validate_style(style);
    validate_layout(layout, g.vertex_count());

    const int n = g.vertex_count();
    const double c = style.cell;
    const double r = style.junction_radius;
    const double size = c * (n + 1);
    auto px = [&](int coord) { return c * coord; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size) << "\" height=\""
        << num(size) << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n";

    out << "<g class=\"edges\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" << num(style.stroke_width)
        << "\">\n";
    for (const Edge& e : g.edges()) {
        const int xu = layout.xs[static_cast<std::size_t>(e.src)];
        const int yu = layout.ys[static_cast<std::size_t>(e.src)];
        const int xv = layout.xs[static_cast<std::size_t>(e.dst)];
        const int yv = layout.ys[static_cast<std::size_t>(e.dst)];
        // Exclusive coordinates: both signs are nonzero.
        const int dy = sign(yv - yu);
        const int dx = sign(xv - xu);
        // Heading (0, dy) turning to (dx, 0); in y-down screen space a positive
        // cross product is a clockwise turn, which is SVG sweep-flag 1.
        const int sweep = -dx * dy > 0 ? 1 : 0;
        out << "<path d=\"M " << num(px(xu)) << " " << num(px(yu)) << " V " << num(px(yv) - dy * r) << " A " << num(r)
            << " " << num(r) << " 0 0 " << sweep << " " << num(px(xu) + dx * r) << " " << num(px(yv)) << " H "
            << num(px(xv)) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"arrows\" fill=\"#333333\" stroke=\"none\">\n";
    for (const Edge& e : g.edges()) {
        const int xu = layout.xs[static_cast<std::size_t>(e.src)];
        const int xv = layout.xs[static_cast<std::size_t>(e.dst)];
        const int yv = layout.ys[static_cast<std::size_t>(e.dst)];
        const int dx = sign(xv - xu);
        const double tip = px(xv) - dx * style.vertex_radius;
        const double base = tip - dx * style.arrow_length;
        const double half = style.arrow_length / 2;
        out << "<polygon points=\"" << num(tip) << "," << num(px(yv)) << " " << num(base) << "," << num(px(yv) - half)
            << " " << num(base) << "," << num(px(yv) + half) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"vertices\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"" << num(style.stroke_width)
        << "\">\n";
    for (Vertex v = 0; v < n; ++v) {
        out << "<circle cx=\"" << num(px(layout.xs[static_cast<std::size_t>(v)])) << "\" cy=\""
            << num(px(layout.ys[static_cast<std::size_t>(v)])) << "\" r=\"" << num(style.vertex_radius) << "\"/>\n";
    }
    out << "</g>\n";

    if (style.labels) {
        out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(style.font_size)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
        for (Vertex v = 0; v < n; ++v) {
            out << "<text x=\"" << num(px(layout.xs[static_cast<std::size_t>(v)])) << "\" y=\""
                << num(px(layout.ys[static_cast<std::size_t>(v)])) << "\">" << xml_escape(g.label(v)) << "</text>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace ldraw
