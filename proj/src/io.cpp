#include "trisect/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace trisect::io {

namespace {

Dart dart_from(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw Error(Err::ParseError, "dart must be [arc, seg, end]");
    return Dart{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json dart_to(const Dart& d) { return json::array({d.arc, d.seg, d.end}); }

ColorPair parse_pair(const std::string& s) {
    for (ColorPair p : all_pairs)
        if (s == to_string(p)) return p;
    throw Error(Err::ParseError, "unknown color pair '" + s + "'");
}

json move_json(const Move& m);

Move move_from(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "perturb" || type == "tube" || type == "crosscap") {
        ColorPair p = parse_pair(j.at("pair").get<std::string>());
        Dart a = dart_from(j.at("dart_a"));
        Dart b = dart_from(j.at("dart_b"));
        std::vector<Dart> path;
        if (j.contains("path"))
            for (const json& js : j.at("path")) path.push_back(dart_from(js));
        if (type == "perturb") return Move::perturb(p, a, b, std::move(path));
        if (type == "tube") return Move::tube(p, a, b, std::move(path));
        return Move::crosscap(p, a, b, j.at("sign").get<int>(), std::move(path));
    }
    if (type == "deperturb") return Move::deperturb(j.at("arc").get<int>());
    if (type == "split")
        return Move::split(j.at("crossing").get<int>(), j.at("diagonal").get<int>());
    if (type == "slide") return Move::slide(dart_from(j.at("dart_arc")), dart_from(j.at("dart_over")));
    if (type == "connect_sum")
        return Move::connect_sum(j.at("x1").get<int>(), parse_diagram(j.at("other")),
                                 j.at("x2").get<int>());
    throw Error(Err::ParseError, "unknown move type '" + type + "'");
}

json move_json(const Move& m) {
    json j;
    j["type"] = to_string(m.kind);
    switch (m.kind) {
        case MoveKind::Perturb:
        case MoveKind::Tube:
        case MoveKind::Crosscap:
            j["pair"] = to_string(m.pair);
            j["dart_a"] = dart_to(m.dart_a);
            j["dart_b"] = dart_to(m.dart_b);
            if (m.kind == MoveKind::Crosscap) j["sign"] = m.sign;
            if (!m.path.empty()) {
                j["path"] = json::array();
                for (const Dart& s : m.path) j["path"].push_back(dart_to(s));
            }
            break;
        case MoveKind::Deperturb:
            j["arc"] = m.arc;
            break;
        case MoveKind::Split:
            j["crossing"] = m.crossing;
            j["diagonal"] = m.diagonal;
            break;
        case MoveKind::Slide:
            j["dart_arc"] = dart_to(m.dart_a);
            j["dart_over"] = dart_to(m.dart_b);
            break;
        case MoveKind::ConnectSum:
            j["x1"] = m.x1;
            j["x2"] = m.x2;
            j["other"] = m.other ? diagram_json(*m.other) : json();
            break;
    }
    return j;
}

}  // namespace

bool GraphFile::fully_colored() const {
    for (const auto& c : colors)
        if (!c) return false;
    return true;
}

TaitGraph GraphFile::tait() const {
    std::vector<Edge> out;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!colors[i])
            throw Error(Err::ParseError,
                        "edge " + std::to_string(edges[i].id) + " has no color");
        out.push_back({edges[i].id, edges[i].u, edges[i].v, *colors[i]});
    }
    return TaitGraph::validate(std::move(out));
}

CubicGraph GraphFile::cubic() const { return CubicGraph::validate(edges); }

GraphFile parse_graph(const std::string& text) {
    GraphFile gf;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int next_id = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word != "EDGE")
            throw Error(Err::ParseError,
                        "line " + std::to_string(lineno) + ": expected EDGE, got '" + word + "'");
        int u, v;
        if (!(ls >> u >> v))
            throw Error(Err::ParseError,
                        "line " + std::to_string(lineno) + ": expected two vertex ids");
        std::string color;
        std::optional<Color> c;
        if (ls >> color && color != "-") {
            try {
                c = parse_color(color);
            } catch (const Error&) {
                throw Error(Err::ParseError,
                            "line " + std::to_string(lineno) + ": unknown color '" + color + "'");
            }
        }
        std::string rest;
        if (ls >> rest)
            throw Error(Err::ParseError,
                        "line " + std::to_string(lineno) + ": trailing tokens after edge");
        gf.edges.push_back({next_id++, u, v});
        gf.colors.push_back(c);
    }
    if (gf.edges.empty()) throw Error(Err::ParseError, "no EDGE lines in graph file");
    return gf;
}

std::string serialize_graph(const TaitGraph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges())
        out << "EDGE " << e.u << " " << e.v << " " << to_string(e.color) << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Err::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(Err::IoError, "cannot read " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Err::IoError, "cannot open " + tmp + " for writing");
        out << content;
        if (!out.flush()) throw Error(Err::IoError, "cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error(Err::IoError, "cannot move " + tmp + " to " + path);
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Err::ParseError, e.what());
    }
}

json diagram_json(const ShadowDiagram& d) {
    json j;
    j["bridge_points"] = d.bridge_points();
    j["crossings"] = d.crossings();
    j["arcs"] = json::array();
    for (const Arc& a : d.arcs()) {
        json ja;
        ja["id"] = a.id;
        ja["color"] = to_string(a.color);
        ja["ends"] = json::array({a.ends[0], a.ends[1]});
        ja["via"] = a.via;
        j["arcs"].push_back(ja);
    }
    j["rotation"] = json::object();
    for (const auto& [v, list] : d.rotation()) {
        json jl = json::array();
        for (const Dart& x : list) jl.push_back(dart_to(x));
        j["rotation"][std::to_string(v)] = jl;
    }
    return j;
}

ShadowDiagram parse_diagram(const json& j) {
    try {
        DiagramData d;
        d.bridge_points = j.at("bridge_points").get<std::vector<int>>();
        d.crossings = j.at("crossings").get<std::vector<int>>();
        for (const json& ja : j.at("arcs")) {
            Arc a;
            a.id = ja.at("id").get<int>();
            a.color = parse_color(ja.at("color").get<std::string>());
            auto ends = ja.at("ends").get<std::vector<int>>();
            if (ends.size() != 2) throw Error(Err::ParseError, "arc ends must be a pair");
            a.ends = {ends[0], ends[1]};
            a.via = ja.at("via").get<std::vector<int>>();
            d.arcs.push_back(a);
        }
        for (const auto& [key, jl] : j.at("rotation").items()) {
            std::vector<Dart> list;
            for (const json& jd : jl) list.push_back(dart_from(jd));
            d.rotation[std::stoi(key)] = list;
        }
        return ShadowDiagram::build(std::move(d));
    } catch (const json::exception& e) {
        throw Error(Err::ParseError, std::string("bad diagram json: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw Error(Err::ParseError, "rotation keys must be vertex ids");
    }
}

json plan_json(const CompressionPlan& p) {
    json j = json::array();
    int idx = 0;
    for (const CompressionStep& s : p.steps) {
        json js;
        js["step_index"] = idx++;
        js["kind"] = to_string(s.kind);
        js["edge"] = {{"u", s.edge.u}, {"v", s.edge.v}, {"color", to_string(s.edge.color)}};
        js["vertices_removed"] = json::array({s.edge.u, s.edge.v});
        j.push_back(js);
    }
    return j;
}

json trace_json(const SynthesisTrace& t) {
    json j;
    j["n_plus"] = t.n_plus;
    j["n_minus"] = t.n_minus;
    j["moves"] = json::array();
    for (const Move& m : t.moves) j["moves"].push_back(move_json(m));
    return j;
}

SynthesisTrace parse_trace(const json& j) {
    try {
        SynthesisTrace t;
        t.n_plus = j.at("n_plus").get<int>();
        t.n_minus = j.at("n_minus").get<int>();
        for (const json& jm : j.at("moves")) t.moves.push_back(move_from(jm));
        return t;
    } catch (const json::exception& e) {
        throw Error(Err::ParseError, std::string("bad trace json: ") + e.what());
    }
}

json certificate_json(const SurfaceCertificate& c) {
    json j;
    j["orientable"] = c.orientable;
    j["genus"] = c.genus;
    j["euler_characteristic"] = c.euler_characteristic;
    j["euler_number"] = c.euler_number;
    j["n_plus"] = c.n_plus;
    j["n_minus"] = c.n_minus;
    j["bridge_points"] = c.bridge_points;
    j["iso_witness"] = json::object();
    for (const auto& [k, v] : c.iso_witness) j["iso_witness"][std::to_string(k)] = v;
    return j;
}

SurfaceCertificate parse_certificate(const json& j) {
    try {
        SurfaceCertificate c;
        c.orientable = j.at("orientable").get<bool>();
        c.genus = j.at("genus").get<int>();
        c.euler_characteristic = j.at("euler_characteristic").get<int>();
        c.euler_number = j.at("euler_number").get<int>();
        c.n_plus = j.at("n_plus").get<int>();
        c.n_minus = j.at("n_minus").get<int>();
        c.bridge_points = j.at("bridge_points").get<int>();
        for (const auto& [k, v] : j.at("iso_witness").items())
            c.iso_witness[std::stoi(k)] = v.get<int>();
        return c;
    } catch (const json::exception& e) {
        throw Error(Err::ParseError, std::string("bad certificate json: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw Error(Err::ParseError, "iso_witness keys must be vertex ids");
    }
}

json report_json(const VerifyReport& r) {
    json j;
    j["skeleton_isomorphic"] = r.skeleton_isomorphic;
    j["sphere_map"] = r.sphere_map;
    j["curves_match_patches"] = r.curves_match_patches;
    j["characteristic_consistent"] = r.characteristic_consistent;
    j["trace_replays"] = r.trace_replays;
    j["euler_in_range"] = r.euler_in_range;
    j["all"] = r.all();
    j["notes"] = r.notes;
    return j;
}

}  // namespace trisect::io
