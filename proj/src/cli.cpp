#include "trisect/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "trisect/colorer.hpp"
#include "trisect/graph.hpp"
#include "trisect/io.hpp"
#include "trisect/planner.hpp"
#include "trisect/render.hpp"
#include "trisect/synth.hpp"

namespace trisect::cli {

namespace {

using io::json;

TaitGraph load_tait(const std::string& path) {
    return io::parse_graph(io::read_file(path)).tait();
}

ShadowDiagram load_diagram(const std::string& path) {
    return io::parse_diagram(io::parse_json_text(io::read_file(path)));
}

// Fixed key order, matching the documented report shape.
std::string profile_text(const SurfaceProfile& p) {
    std::ostringstream os;
    os << "{\"patch_numbers\":[" << p.patch_numbers[0] << "," << p.patch_numbers[1] << ","
       << p.patch_numbers[2] << "],\"orientable\":" << (p.orientable ? "true" : "false")
       << ",\"euler_characteristic\":" << p.euler_characteristic << ",\"genus\":" << p.genus
       << "}";
    return os.str();
}

ColorPair pair_from_name(const std::string& s) {
    for (ColorPair p : all_pairs)
        if (s == to_string(p)) return p;
    throw Error(Err::ParseError, "unknown color pair '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Shadow diagrams of bridge-trisected unknotted surfaces, built from "
        "Tait-colored cubic graphs"};
    app.require_subcommand(1);

    std::string graph_path, diagram_path, trace_path, cert_path, out_path;
    std::string pair_name = "rb";
    int limit = 100;
    bool distinct = false;
    int euler = 0;
    std::uint64_t seed = 0;

    auto* c_validate =
        app.add_subcommand("validate", "Check a graph file: cubic, connected, Tait-colored");
    c_validate->add_option("graph", graph_path, "graph file")->required();

    auto* c_analyze = app.add_subcommand(
        "analyze", "Patch numbers, orientability, Euler characteristic and genus");
    c_analyze->add_option("graph", graph_path, "graph file")->required();

    auto* c_color =
        app.add_subcommand("color", "Enumerate proper 3-edge-colorings of a cubic graph");
    c_color->add_option("graph", graph_path, "graph file (colors ignored)")->required();
    c_color->add_option("--limit", limit, "maximum number of colorings to report")
        ->check(CLI::PositiveNumber);
    c_color->add_flag("--distinct", distinct, "one coloring per color-permutation class");

    auto* c_plan =
        app.add_subcommand("plan", "Compression sequence from the graph down to the theta graph");
    c_plan->add_option("graph", graph_path, "graph file")->required();

    auto* c_synth = app.add_subcommand(
        "synthesize",
        "Build a shadow diagram whose skeleton is the input graph; prints the certificate");
    c_synth->add_option("graph", graph_path, "graph file")->required();
    auto* euler_opt = c_synth->add_option(
        "--euler", euler, "normal Euler number target (nonorientable graphs only)");
    c_synth->add_option("--out", out_path, "write the diagram JSON here");
    c_synth->add_option("--trace", trace_path, "write the move trace JSON here");
    c_synth->add_option("--seed", seed,
                        "seed for randomized strategies (the built-in strategy is deterministic); "
                        "the TRISECT_SEED environment variable takes precedence");

    auto* c_verify =
        app.add_subcommand("verify", "Check a diagram, trace and certificate against a graph");
    c_verify->add_option("graph", graph_path, "graph file")->required();
    c_verify->add_option("diagram", diagram_path, "diagram JSON")->required();
    c_verify->add_option("trace", trace_path, "trace JSON")->required();
    c_verify->add_option("certificate", cert_path, "certificate JSON")->required();

    auto* c_render = app.add_subcommand("render", "Draw a diagram as SVG");
    c_render->add_option("diagram", diagram_path, "diagram JSON")->required();
    c_render->add_option("--out", out_path, "write the SVG here instead of stdout");
    c_render->add_option("--pair", pair_name, "pairing drawn as polygons (default rb)")
        ->check(CLI::IsMember({"rb", "bg", "gr"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_validate)) {
            io::GraphFile gf = io::parse_graph(io::read_file(graph_path));
            json rep;
            rep["edges"] = gf.edges.size();
            if (gf.fully_colored()) {
                TaitGraph g = gf.tait();
                rep["vertices"] = g.n();
                rep["tait_colored"] = true;
            } else {
                CubicGraph g = gf.cubic();
                rep["vertices"] = g.vertices().size();
                rep["tait_colored"] = false;
            }
            rep["valid"] = true;
            out << rep.dump() << "\n";
        } else if (app.got_subcommand(c_analyze)) {
            out << profile_text(surface_profile(load_tait(graph_path))) << "\n";
        } else if (app.got_subcommand(c_color)) {
            CubicGraph g = io::parse_graph(io::read_file(graph_path)).cubic();
            auto found = find_tait_colorings(g, limit, distinct);
            json arr = json::array();
            for (const TaitGraph& tg : found) {
                json one = json::array();
                for (const Edge& e : tg.edges())
                    one.push_back({{"u", e.u}, {"v", e.v}, {"color", to_string(e.color)}});
                arr.push_back(std::move(one));
            }
            out << json{{"count", arr.size()}, {"colorings", arr}}.dump() << "\n";
        } else if (app.got_subcommand(c_plan)) {
            out << io::plan_json(plan(load_tait(graph_path))).dump() << "\n";
        } else if (app.got_subcommand(c_synth)) {
            if (const char* env = std::getenv("TRISECT_SEED")) seed = std::strtoull(env, nullptr, 10);
            (void)seed;  // reserved for randomized strategies
            std::optional<int> target;
            if (euler_opt->count() > 0) target = euler;
            TaitGraph g = load_tait(graph_path);
            SynthesisResult res = synthesize(g, target);
            if (!out_path.empty()) io::write_file(out_path, io::diagram_json(res.diagram).dump(2) + "\n");
            if (!trace_path.empty()) io::write_file(trace_path, io::trace_json(res.trace).dump(2) + "\n");
            out << io::certificate_json(res.certificate).dump() << "\n";
        } else if (app.got_subcommand(c_verify)) {
            TaitGraph g = load_tait(graph_path);
            ShadowDiagram d = load_diagram(diagram_path);
            SynthesisTrace t = io::parse_trace(io::parse_json_text(io::read_file(trace_path)));
            SurfaceCertificate c =
                io::parse_certificate(io::parse_json_text(io::read_file(cert_path)));
            VerifyReport rep = verify(g, d, t, c);
            out << io::report_json(rep).dump() << "\n";
            if (!rep.all()) {
                err << "verification failed\n";
                return 1;
            }
        } else if (app.got_subcommand(c_render)) {
            ShadowDiagram d = load_diagram(diagram_path);
            RenderSpec spec;
            spec.pair = pair_from_name(pair_name);
            std::string svg = render_svg(d, spec);
            if (!out_path.empty())
                io::write_file(out_path, svg);
            else
                out << svg;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return is_io_error(e.kind()) ? 2 : 1;
    }
    return 0;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace trisect::cli
