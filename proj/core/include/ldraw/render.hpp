#pragma once

#include "ldraw/graph.hpp"
#include "ldraw/layout.hpp"

#include <string>

namespace ldraw {

/// Pixel measurements of a rendered L-drawing. Grid unit = `cell` pixels.
struct RenderStyle {
    double cell = 40.0;
    double junction_radius = 10.0; ///< must stay below cell / 2
    double vertex_radius = 9.0;
    double arrow_length = 6.0;
    double stroke_width = 1.5;
    double font_size = 10.0;
    bool labels = true;
};

/// Throws InvalidInput if any measurement is non-positive (the junction radius
/// may be zero) or the junction radius is not strictly below half a cell.
void validate_style(const RenderStyle& style);

/// SVG 1.1 document. Row 1 is at the top; column/row c maps to pixel
/// cell * c. Each edge (u, v) is a single <path>
///   M (x_u, y_u) V (y_v -/+ r) A r r 0 0 sweep (x_u +/- r, y_v) H x_v
/// i.e. the vertical leg is cut back by the junction radius r before the bend
/// and the horizontal leg starts r past it. Arrowheads are separate polygons at
/// the rim of the target's glyph. Output is byte-for-byte deterministic.
std::string render_svg(const DirectedGraph& g, const Layout& layout, const RenderStyle& style = {});

} // namespace ldraw
