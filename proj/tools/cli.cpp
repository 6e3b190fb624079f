#include "cli.hpp"

#include "ldraw/error.hpp"
#include "ldraw/exact.hpp"
#include "ldraw/graph.hpp"
#include "ldraw/incremental.hpp"
#include "ldraw/layout.hpp"
#include "ldraw/reduction.hpp"
#include "ldraw/render.hpp"
#include "ldraw/seed.hpp"
#include "ldraw/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ldraw::cli {

namespace {

using nlohmann::json;

/// Input-side failure (unreadable file, bad value); maps to exit code 2.
class InputFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputFailure("cannot write '" + path + "'");
    f << content;
}

struct Globals {
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
};

class Output {
public:
    Output(const Globals& g, std::ostream& console) : path_(g.out), console_(console) {}
    std::ostream& stream() { return buffer_; }
    void flush() {
        if (path_.empty()) console_ << buffer_.str();
        else write_file(path_, buffer_.str());
    }

private:
    std::string path_;
    std::ostream& console_;
    std::ostringstream buffer_;
};

Vertex find_vertex(const DirectedGraph& g, const std::string& label) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.label(v) == label) return v;
    throw InputFailure("unknown vertex '" + label + "'");
}

json layout_json(const DirectedGraph& g, const Layout& layout, const InkBreakdown& ink) {
    json vertices = json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        vertices.push_back({{"id", g.label(v)},
                            {"x", layout.xs[static_cast<std::size_t>(v)]},
                            {"y", layout.ys[static_cast<std::size_t>(v)]}});
    }
    return {{"vertices", vertices}, {"ink", ink.ink}, {"ink_x", ink.ink_x}, {"ink_y", ink.ink_y}};
}

Layout layout_from_json(const DirectedGraph& g, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputFailure(std::string("invalid layout JSON: ") + e.what());
    }
    std::ostringstream lines;
    try {
        for (const auto& v : doc.at("vertices"))
            lines << v.at("id").get<std::string>() << " " << v.at("x").get<int>() << " " << v.at("y").get<int>()
                  << "\n";
    } catch (const json::exception& e) {
        throw InputFailure(std::string("invalid layout JSON: ") + e.what());
    }
    return parse_layout_text(g, lines.str());
}

Layout read_layout(const DirectedGraph& g, const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return layout_from_json(g, text);
    return parse_layout_text(g, text);
}

void emit_layout(Output& out, const Globals& globals, const DirectedGraph& g, const Layout& layout) {
    const InkBreakdown ink = compute_ink(g, layout);
    if (globals.format == "json") {
        out.stream() << layout_json(g, layout, ink).dump(2) << "\n";
    } else {
        out.stream() << "# ink " << ink.ink << " ink_x " << ink.ink_x << " ink_y " << ink.ink_y << "\n"
                     << layout_to_text(g, layout);
    }
}

struct SvgOptions {
    std::string path;
    RenderStyle style;
};

void add_svg_options(CLI::App* sub, SvgOptions& svg) {
    sub->add_option("--svg", svg.path, "Also write an SVG rendering to this file");
    sub->add_option("--cell", svg.style.cell, "SVG: pixels per grid unit");
    sub->add_option("--junction-radius", svg.style.junction_radius, "SVG: bend arc radius in pixels");
    sub->add_option("--vertex-radius", svg.style.vertex_radius, "SVG: vertex glyph radius in pixels");
    sub->add_option("--arrow-length", svg.style.arrow_length, "SVG: arrowhead length in pixels");
    sub->add_option("--stroke-width", svg.style.stroke_width, "SVG: stroke width in pixels");
    sub->add_option("--font-size", svg.style.font_size, "SVG: label font size");
    sub->add_flag("!--no-labels", svg.style.labels, "SVG: omit vertex labels");
}

void maybe_render(const SvgOptions& svg, const DirectedGraph& g, const Layout& layout) {
    if (!svg.path.empty()) write_file(svg.path, render_svg(g, layout, svg.style));
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputFailure(std::string("invalid ") + what + " list '" + text + "'");
        }
    }
    return values;
}

std::string graph_text(const DirectedGraph& g, const std::string& format) {
    if (format == "dot") return to_dot(g);
    return to_edge_list(g);
}

json summary_json(const SuiteSpec& spec, const SuiteResult& result) {
    auto stats = [](const Stats& s) {
        return json{{"count", s.count}, {"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
    };
    json cells = json::array();
    for (const CellSummary& c : summarize_cells(result)) {
        cells.push_back({{"n", c.n},
                         {"density", c.density},
                         {"algorithm", std::string(to_string(c.algorithm))},
                         {"ink", stats(c.ink)},
                         {"max_ink", c.max_ink},
                         {"saved_ink", c.saved_ink}});
    }
    json instances = json::array();
    for (const InstanceSummary& s : summarize_instances(result)) {
        instances.push_back({{"graph_id", s.graph_id},
                             {"n", s.n},
                             {"density", s.density},
                             {"algorithm", std::string(to_string(s.algorithm))},
                             {"ink", stats(s.ink)}});
    }
    json errors = json::array();
    for (const CellError& e : result.errors)
        errors.push_back({{"n", e.n}, {"density", e.density}, {"message", e.message}});
    return {{"seed", spec.seed},   {"runs", spec.runs},       {"instances_per_cell", spec.instances},
            {"cells", cells},      {"instances", instances}, {"errors", errors}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ldraw: minimum-ink L-drawings of directed graphs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Globals globals;
    app.add_option("--seed", globals.seed, "Random seed (all randomness derives from it)");
    app.add_option("--format", globals.format, "Output format: text|json for layouts and ink, edgelist|dot for graphs")
        ->check(CLI::IsMember({"text", "json", "edgelist", "dot"}));
    app.add_option("--out", globals.out, "Write the main output to this file instead of stdout");

    // layout ---------------------------------------------------------------
    auto* layout_cmd = app.add_subcommand("layout", "Incremental minimum-ink heuristic");
    std::string layout_graph;
    std::string start_label;
    std::string trace_path;
    bool no_shuffle = false;
    SvgOptions layout_svg;
    layout_cmd->add_option("graph", layout_graph, "Graph file (edge list or DOT), '-' for stdin")->required();
    layout_cmd->add_option("--start", start_label, "Label of the BFS start vertex (default: first vertex)");
    layout_cmd->add_flag("--no-shuffle", no_shuffle, "Visit BFS neighbors in id order");
    layout_cmd->add_option("--trace", trace_path, "Write the per-step insertion costs as CSV");
    add_svg_options(layout_cmd, layout_svg);

    // exact ----------------------------------------------------------------
    auto* exact_cmd = app.add_subcommand("exact", "Exact minimum-ink layout (per-axis optimum)");
    std::string exact_graph;
    std::string exact_method = "dp";
    ExactLimits limits;
    SvgOptions exact_svg;
    exact_cmd->add_option("graph", exact_graph, "Graph file")->required();
    exact_cmd->add_option("--method", exact_method, "dp (subset dynamic program) or bnb (branch and bound)")
        ->check(CLI::IsMember({"dp", "bnb"}));
    exact_cmd->add_option("--max-dp", limits.max_subset_dp, "Size guard for the subset DP");
    exact_cmd->add_option("--max-bnb", limits.max_branch_and_bound, "Size guard for branch and bound");
    add_svg_options(exact_cmd, exact_svg);

    // random ---------------------------------------------------------------
    auto* random_cmd = app.add_subcommand("random", "Uniform random permutation on each axis");
    std::string random_graph;
    SvgOptions random_svg;
    random_cmd->add_option("graph", random_graph, "Graph file")->required();
    add_svg_options(random_cmd, random_svg);

    // ink ------------------------------------------------------------------
    auto* ink_cmd = app.add_subcommand("ink", "Evaluate the ink of a given layout");
    std::string ink_graph, ink_layout;
    ink_cmd->add_option("graph", ink_graph, "Graph file")->required();
    ink_cmd->add_option("layout", ink_layout, "Layout file (\"vertex x y\" lines or JSON)")->required();

    // emit-lp --------------------------------------------------------------
    auto* lp_cmd = app.add_subcommand("emit-lp", "Write the integer program for one axis in LP format");
    std::string lp_graph;
    std::string lp_axis = "x";
    lp_cmd->add_option("graph", lp_graph, "Graph file")->required();
    lp_cmd->add_option("--axis", lp_axis, "x or y")->check(CLI::IsMember({"x", "y"}));

    // gen ------------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "Generate random connected graphs");
    int gen_n = 0, gen_p = 0;
    std::string gen_sizes, gen_densities;
    int gen_instances = 10;
    std::string gen_dir;
    gen_cmd->add_option("--n", gen_n, "Vertex count of a single graph");
    gen_cmd->add_option("--p", gen_p, "Edge density in percent of n(n-1) for a single graph");
    gen_cmd->add_option("--sizes", gen_sizes, "Suite: comma-separated vertex counts");
    gen_cmd->add_option("--densities", gen_densities, "Suite: comma-separated densities in percent");
    gen_cmd->add_option("--instances", gen_instances, "Suite: graphs per cell");
    gen_cmd->add_option("--dir", gen_dir, "Suite: output directory (one file per graph)");

    // bench ----------------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "Run heuristic/exact/random comparisons and write CSV");
    std::string bench_sizes = "5,10,15", bench_densities = "10,20,30,70";
    SuiteSpec spec;
    bool no_exact = false, no_random = false, timing = false;
    std::string summary_path;
    bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated vertex counts");
    bench_cmd->add_option("--densities", bench_densities, "Comma-separated densities in percent");
    bench_cmd->add_option("--instances", spec.instances, "Graphs per cell");
    bench_cmd->add_option("--runs", spec.runs, "Runs per graph for the randomized algorithms");
    bench_cmd->add_option("--max-size", spec.max_size, "Largest admissible n");
    bench_cmd->add_option("--max-dp", spec.exact_limits.max_subset_dp, "Largest n solved exactly");
    bench_cmd->add_option("--threads", spec.threads, "Worker threads (0 = hardware concurrency)");
    bench_cmd->add_flag("--no-exact", no_exact, "Skip the exact solver");
    bench_cmd->add_flag("--no-random", no_random, "Skip the random baseline");
    bench_cmd->add_flag("--timing", timing, "Fill the time_ms column (output is then not reproducible)");
    bench_cmd->add_option("--summary", summary_path, "Write per-cell/per-instance statistics as JSON");

    // reduce ---------------------------------------------------------------
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the minimum-ink instance encoding a profile instance");
    std::string reduce_graph, meta_path;
    std::int64_t reduce_k = 0;
    reduce_cmd->add_option("graph", reduce_graph, "Undirected base graph (edges are symmetrized)")->required();
    reduce_cmd->add_option("--k", reduce_k, "Profile budget")->required();
    reduce_cmd->add_option("--meta", meta_path, "Also write the metadata as JSON");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    try {
        Output output(globals, out);

        if (*layout_cmd) {
            const DirectedGraph g = parse_graph(read_file(layout_graph));
            const Vertex start = start_label.empty() ? 0 : find_vertex(g, start_label);
            std::ostringstream trace;
            trace << "step,vertex,axis,position,stretch,incoming,outgoing,total,chosen\n";
            int step_no = 0;
            auto on_step = [&](const IncrementalDrawer::Step& step) {
                for (const AddInkProfile* p : {&step.x, &step.y}) {
                    for (int i = 1; i <= p->positions(); ++i) {
                        const auto k = static_cast<std::size_t>(i - 1);
                        trace << step_no << "," << g.label(step.vertex) << "," << (p->axis == Axis::x ? "x" : "y")
                              << "," << i << "," << p->stretch[k] << "," << p->incoming[k] << "," << p->outgoing[k]
                              << "," << p->total[k] << "," << (i == p->best_position ? 1 : 0) << "\n";
                    }
                }
                ++step_no;
            };
            std::optional<std::uint64_t> order_seed;
            if (!no_shuffle) order_seed = globals.seed;
            const Layout layout = incremental_draw(g, start, order_seed, trace_path.empty() ? StepCallback{} : on_step);
            emit_layout(output, globals, g, layout);
            if (!trace_path.empty()) write_file(trace_path, trace.str());
            maybe_render(layout_svg, g, layout);
        } else if (*exact_cmd) {
            const DirectedGraph g = parse_graph(read_file(exact_graph));
            const auto method = exact_method == "bnb" ? ExactMethod::branch_and_bound : ExactMethod::subset_dp;
            const ExactResult result = exact_layout(g, method, limits);
            emit_layout(output, globals, g, result.layout);
            maybe_render(exact_svg, g, result.layout);
        } else if (*random_cmd) {
            const DirectedGraph g = parse_graph(read_file(random_graph));
            const Layout layout = random_layout(g.vertex_count(), globals.seed);
            emit_layout(output, globals, g, layout);
            maybe_render(random_svg, g, layout);
        } else if (*ink_cmd) {
            const DirectedGraph g = parse_graph(read_file(ink_graph));
            const Layout layout = read_layout(g, ink_layout);
            const InkBreakdown ink = compute_ink(g, layout);
            if (globals.format == "json")
                output.stream() << json{{"ink", ink.ink}, {"ink_x", ink.ink_x}, {"ink_y", ink.ink_y}}.dump() << "\n";
            else
                output.stream() << ink.ink << "\n";
        } else if (*lp_cmd) {
            const DirectedGraph g = parse_graph(read_file(lp_graph));
            output.stream() << emit_lp(g, lp_axis == "y" ? Axis::y : Axis::x);
        } else if (*gen_cmd) {
            const std::string format = globals.format == "dot" ? "dot" : "edgelist";
            if (gen_n > 0) {
                output.stream() << graph_text(random_connected_gnm(gen_n, gen_p, globals.seed), format);
            } else {
                if (gen_sizes.empty() || gen_densities.empty() || gen_dir.empty())
                    throw InputFailure("gen needs either --n/--p or --sizes, --densities and --dir");
                SuiteSpec gen_spec;
                gen_spec.sizes = parse_int_list(gen_sizes, "size");
                gen_spec.densities = parse_int_list(gen_densities, "density");
                gen_spec.instances = gen_instances;
                gen_spec.seed = globals.seed;
                gen_spec.max_size = std::numeric_limits<int>::max();
                std::vector<CellError> errors;
                const auto instances = generate_suite(gen_spec, errors);
                std::filesystem::create_directories(gen_dir);
                const std::string ext = format == "dot" ? ".dot" : ".txt";
                for (const auto& inst : instances)
                    write_file((std::filesystem::path(gen_dir) / (inst.id + ext)).string(),
                               graph_text(inst.graph, format));
                for (const auto& e : errors)
                    err << "warning: cell n=" << e.n << " p=" << e.density << ": " << e.message << "\n";
                output.stream() << instances.size() << " graphs written to " << gen_dir << "\n";
            }
        } else if (*bench_cmd) {
            spec.sizes = parse_int_list(bench_sizes, "size");
            spec.densities = parse_int_list(bench_densities, "density");
            spec.seed = globals.seed;
            spec.run_exact = !no_exact;
            spec.run_random = !no_random;
            const SuiteResult result = run_suite(spec);
            for (const auto& e : result.errors)
                err << "warning: cell n=" << e.n << " p=" << e.density << ": " << e.message << "\n";
            output.stream() << records_to_csv(result.records, timing);
            if (!summary_path.empty()) write_file(summary_path, summary_json(spec, result).dump(2) + "\n");
        } else if (*reduce_cmd) {
            const DirectedGraph given = parse_graph(read_file(reduce_graph));
            std::vector<Edge> symmetric;
            for (const Edge& e : given.edges()) {
                symmetric.push_back(e);
                symmetric.push_back({e.dst, e.src});
            }
            const DirectedGraph base(given.vertex_count(), std::move(symmetric),
                                     std::vector<std::string>(given.labels().begin(), given.labels().end()));
            const ReductionInstance inst = build_mild_instance(base, reduce_k);
            output.stream() << instance_to_text(inst);
            if (!meta_path.empty()) {
                json meta{{"base_vertices", inst.base_vertices},
                          {"p", inst.p},
                          {"k", inst.k},
                          {"k_prime", inst.k_prime},
                          {"anchor1", inst.graph.label(inst.anchor1)},
                          {"anchor2", inst.graph.label(inst.anchor2)},
                          {"vertices", inst.graph.vertex_count()},
                          {"edges", inst.graph.edge_count()}};
                write_file(meta_path, meta.dump(2) + "\n");
            }
        }
        output.flush();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const SizeGuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const InputFailure& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}

} // namespace ldraw::cli
