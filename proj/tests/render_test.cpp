#include "ldraw/error.hpp"
#include "ldraw/render.hpp"
#include "oracles.hpp"
#include "svg_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ldraw;

namespace {

using PathGeom = check::SvgEdgePath;

std::vector<PathGeom> parse_paths(const std::string& svg) { return check::parse_edge_paths(svg); }

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
    return c;
}

} // namespace

TEST(RenderSvg, SingleEdgeHasOneArc) {
    DirectedGraph g(2, {{0, 1}});
    const std::string svg = render_svg(g, Layout{{1, 2}, {2, 1}});
    const auto paths = parse_paths(svg);
    ASSERT_EQ(paths.size(), 1u);
    const PathGeom& p = paths[0];
    EXPECT_EQ(count(svg, " A "), 1u);
    EXPECT_DOUBLE_EQ(p.mx, 40);
    EXPECT_DOUBLE_EQ(p.my, 80);
    EXPECT_DOUBLE_EQ(p.vy, 50); // stops one radius short of row 1
    EXPECT_DOUBLE_EQ(p.ax, 50);
    EXPECT_DOUBLE_EQ(p.ay, 40);
    EXPECT_DOUBLE_EQ(p.hx, 80);
    EXPECT_EQ(p.sweep, 1); // up then right turns clockwise on screen
}

TEST(RenderSvg, CompleteThree) {
    const DirectedGraph k3 = complete_graph(3);
    const std::string svg = render_svg(k3, Layout{{1, 2, 3}, {3, 1, 2}});
    EXPECT_EQ(parse_paths(svg).size(), 6u);
    EXPECT_EQ(count(svg, "<path "), 6u);
    EXPECT_EQ(count(svg, "<polygon "), 6u);
    EXPECT_EQ(count(svg, "<circle "), 3u);
}

TEST(RenderSvg, EdgelessGraph) {
    DirectedGraph g(4, {});
    const std::string svg = render_svg(g, Layout::diagonal(4));
    EXPECT_EQ(count(svg, "<path "), 0u);
    EXPECT_EQ(count(svg, "<circle "), 4u);
    EXPECT_EQ(count(svg, "<text "), 4u);
}

TEST(RenderSvg, VerticesDrawnAfterEdges) {
    const std::string svg = render_svg(complete_graph(3), Layout::diagonal(3));
    EXPECT_LT(svg.rfind("<path "), svg.find("<circle "));
    EXPECT_LT(svg.find("<circle "), svg.find("<text "));
}

TEST(RenderSvg, GeometryReproducesInk) {
    std::mt19937_64 rng(89);
    RenderStyle style;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const DirectedGraph g = check::random_digraph(n, 0.3, rng);
        const Layout l = check::random_canonical_layout(n, rng);
        const std::string svg = render_svg(g, l, style);
        ASSERT_EQ(parse_paths(svg).size(), g.edge_count());
        const auto raster = check::rasterize_svg(svg, style.cell, style.junction_radius);
        const InkBreakdown ink = compute_ink(g, l);
        EXPECT_EQ(raster.horizontal, ink.ink_x);
        EXPECT_EQ(raster.vertical, ink.ink_y);
    }
}

TEST(RenderSvg, Snapshot) {
    DirectedGraph g(2, {{0, 1}}, {"a", "b"});
    RenderStyle style;
    style.cell = 20;
    style.junction_radius = 5;
    style.vertex_radius = 4;
    style.arrow_length = 3;
    style.stroke_width = 1;
    style.font_size = 6;
    const std::string expected =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"60\" height=\"60\" viewBox=\"0 0 60 60\">\n"
        "<g class=\"edges\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\">\n"
        "<path d=\"M 20 20 V 35 A 5 5 0 0 0 25 40 H 40\"/>\n"
        "</g>\n"
        "<g class=\"arrows\" fill=\"#333333\" stroke=\"none\">\n"
        "<polygon points=\"36,40 33,38.5 33,41.5\"/>\n"
        "</g>\n"
        "<g class=\"vertices\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\">\n"
        "<circle cx=\"20\" cy=\"20\" r=\"4\"/>\n"
        "<circle cx=\"40\" cy=\"40\" r=\"4\"/>\n"
        "</g>\n"
        "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"6\" text-anchor=\"middle\" "
        "dominant-baseline=\"central\">\n"
        "<text x=\"20\" y=\"20\">a</text>\n"
        "<text x=\"40\" y=\"40\">b</text>\n"
        "</g>\n"
        "</svg>\n";
    EXPECT_EQ(render_svg(g, Layout::diagonal(2), style), expected);
}

TEST(RenderSvg, EscapesLabels) {
    DirectedGraph g(1, {}, {"a<&>\"b"});
    const std::string svg = render_svg(g, Layout::diagonal(1));
    EXPECT_NE(svg.find(">a&lt;&amp;&gt;&quot;b</text>"), std::string::npos);
    RenderStyle no_labels;
    no_labels.labels = false;
    EXPECT_EQ(count(render_svg(g, Layout::diagonal(1), no_labels), "<text"), 0u);
}

TEST(RenderSvg, StyleValidation) {
    RenderStyle s;
    EXPECT_NO_THROW(validate_style(s));
    s.junction_radius = 0;
    EXPECT_NO_THROW(validate_style(s));
    s.junction_radius = 20;
    EXPECT_THROW(validate_style(s), InvalidInput);
    s = RenderStyle{};
    s.cell = 0;
    EXPECT_THROW(validate_style(s), InvalidInput);
    s = RenderStyle{};
    s.junction_radius = -1;
    EXPECT_THROW(validate_style(s), InvalidInput);
    EXPECT_THROW(render_svg(DirectedGraph(2, {}), Layout{{1, 1}, {1, 2}}), InvalidInput);
}
