#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisect/colorer.hpp"
#include "trisect/graph.hpp"
#include "trisect/planner.hpp"
#include "trisect/synth.hpp"

namespace trisect::io {

using json = nlohmann::json;

// A parsed graph file: "EDGE u v color" lines, '#' comments. The color field
// may be "-" or absent, leaving that edge uncolored.
struct GraphFile {
    std::vector<UncoloredEdge> edges;
    std::vector<std::optional<Color>> colors;  // parallel to edges

    bool fully_colored() const;
    TaitGraph tait() const;    // requires every edge colored
    CubicGraph cubic() const;  // drops the colors
};

GraphFile parse_graph(const std::string& text);
std::string serialize_graph(const TaitGraph& g);

// Whole-file helpers. Reads throw IoError on missing/unreadable paths;
// writes are atomic (temp file + rename).
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
json parse_json_text(const std::string& text);  // ParseError with position detail

// Diagrams round-trip bit-exactly. Darts serialize as [arc, seg, end].
json diagram_json(const ShadowDiagram& d);
ShadowDiagram parse_diagram(const json& j);

json plan_json(const CompressionPlan& p);

json trace_json(const SynthesisTrace& t);
SynthesisTrace parse_trace(const json& j);

json certificate_json(const SurfaceCertificate& c);
SurfaceCertificate parse_certificate(const json& j);

json report_json(const VerifyReport& r);

}  // namespace trisect::io
