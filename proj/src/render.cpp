#include "trisect/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "trisect/standardize.hpp"

namespace trisect {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Pt {
    double x = 0, y = 0;
};

Pt lerp(Pt a, Pt b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

// Geometry of one polygon side, oriented from the arc's ends[0].
struct SideGeom {
    bool circular = false;
    Pt p0{}, p1{};
    Pt c{};
    double r = 0, th0 = 0, th1 = 0;

    Pt at(double t) const {
        if (!circular) return lerp(p0, p1, t);
        double th = th0 + (th1 - th0) * t;
        return {c.x + r * std::cos(th), c.y + r * std::sin(th)};
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string color_hex(Color c) {
    switch (c) {
        case Color::R: return "#cc3344";
        case Color::B: return "#3355cc";
        case Color::G: return "#229944";
    }
    return "#000000";
}

}  // namespace

std::string render_svg(const ShadowDiagram& input, const RenderSpec& spec) {
    ShadowDiagram d = input;
    std::string note;
    if (!d.pairing_report(spec.pair).standard) {
        try {
            auto [sd, moves] = standardize(d, spec.pair);
            d = sd;
            note = "standardized (" + std::to_string(moves.size()) + " moves) before rendering";
        } catch (const Error&) {
            // Drawable anyway: curves come from the endpoint matchings, so a
            // crossed pairing only degrades marker placement.
            note = "pairing is not standard; curve layout is approximate";
        }
    }

    auto cs = colors_of(spec.pair);
    Color third_color = third(spec.pair);
    auto curves = d.pairing_curves(spec.pair);

    // Regular polygons on one row, radius grown with the curve length.
    std::map<int, Pt> pos;                    // vertex -> coordinates
    std::map<int, SideGeom> side;             // pairing arc id -> geometry
    std::map<int, Pt> center_of_curve_of_bp;  // for bending chords inward
    double max_r = 0;
    for (const auto& curve : curves) max_r = std::max(max_r, 46.0 + 10.0 * curve.size());
    const double margin = 50, gap = 70;
    const double cy = margin + max_r;
    double cx = margin;
    for (const auto& curve : curves) {
        int n = static_cast<int>(curve.size());
        double radius = 46.0 + 10.0 * n;
        cx += radius;
        Pt center{cx, cy};
        for (int k = 0; k < n; ++k) {
            double th = -kPi / 2 + 2 * kPi * k / n;
            pos[curve[k]] = {center.x + radius * std::cos(th), center.y + radius * std::sin(th)};
            center_of_curve_of_bp[curve[k]] = center;
        }
        for (int k = 0; k < n; ++k) {
            int from = curve[k], to = curve[(k + 1) % n];
            const Arc& a = d.arc(d.arc_at(from, cs[k % 2]));
            SideGeom g;
            if (n == 2) {
                // Two bridge points: the two sides are the halves of a circle.
                g.circular = true;
                g.c = center;
                g.r = radius;
                g.th0 = -kPi / 2 + kPi * k;
                g.th1 = g.th0 + kPi;
            } else {
                g.p0 = pos[from];
                g.p1 = pos[to];
            }
            if (a.ends[0] != from) {  // orient from the arc's own ends[0]
                std::swap(g.p0, g.p1);
                std::swap(g.th0, g.th1);
            }
            side[a.id] = g;
        }
        cx += radius + gap;
    }
    double width = cx - gap + margin, height = 2 * (margin + max_r);

    // Crossings sit on a hosting pairing arc when one passes through them;
    // crossings between two third-color arcs get a fallback spot.
    int stray = 0;
    for (int x : d.crossings()) {
        const Arc* host = nullptr;
        int idx = -1;
        for (const Arc& a : d.arcs()) {
            if (!side.count(a.id)) continue;
            for (size_t j = 0; j < a.via.size(); ++j)
                if (a.via[j] == x && !host) {
                    host = &a;
                    idx = static_cast<int>(j);
                }
        }
        if (host) {
            double t = (idx + 1.0) / (host->via.size() + 1.0);
            pos[x] = side.at(host->id).at(t);
        } else {
            const auto& list = d.rotation().at(x);
            const Arc& a = d.arc(list[0].arc);
            const Arc& b = d.arc(list[1].arc);
            Pt m{(pos[a.ends[0]].x + pos[a.ends[1]].x + pos[b.ends[0]].x + pos[b.ends[1]].x) / 4,
                 (pos[a.ends[0]].y + pos[a.ends[1]].y + pos[b.ends[0]].y + pos[b.ends[1]].y) / 4};
            pos[x] = {m.x + 7.0 * stray, m.y};
            ++stray;
        }
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!note.empty()) svg << "<!-- " << note << " -->\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width * spec.scale)
        << "\" height=\"" << num(height * spec.scale) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Pairing arcs: the polygon sides (circular for two-point curves).
    for (const Arc& a : d.arcs()) {
        auto it = side.find(a.id);
        if (it == side.end()) continue;
        const SideGeom& g = it->second;
        svg << "  <path id=\"arc" << a.id << "\" d=\"";
        if (g.circular) {
            Pt p0 = g.at(0), p1 = g.at(1);
            int sweep = g.th1 > g.th0 ? 1 : 0;
            svg << "M " << num(p0.x) << " " << num(p0.y) << " A " << num(g.r) << " " << num(g.r)
                << " 0 0 " << sweep << " " << num(p1.x) << " " << num(p1.y);
        } else {
            svg << "M " << num(g.p0.x) << " " << num(g.p0.y) << " L " << num(g.p1.x) << " "
                << num(g.p1.y);
        }
        svg << "\" fill=\"none\" stroke=\"" << color_hex(a.color) << "\" stroke-width=\"2\"/>\n";
    }

    // Third-color arcs: chords bent toward the polygon center when both ends
    // share a curve, straight polylines through their crossings otherwise.
    for (const Arc& a : d.arcs()) {
        if (a.color != third_color) continue;
        Pt e0 = pos.at(a.ends[0]), e1 = pos.at(a.ends[1]);
        svg << "  <path id=\"arc" << a.id << "\" d=\"M " << num(e0.x) << " " << num(e0.y);
        if (a.via.empty()) {
            Pt mid = lerp(e0, e1, 0.5);
            Pt ca = center_of_curve_of_bp.at(a.ends[0]);
            Pt cb = center_of_curve_of_bp.at(a.ends[1]);
            if (ca.x == cb.x && ca.y == cb.y) mid = lerp(mid, ca, 0.25);
            svg << " Q " << num(mid.x) << " " << num(mid.y) << " " << num(e1.x) << " "
                << num(e1.y);
        } else {
            for (int x : a.via) svg << " L " << num(pos.at(x).x) << " " << num(pos.at(x).y);
            svg << " L " << num(e1.x) << " " << num(e1.y);
        }
        svg << "\" fill=\"none\" stroke=\"" << color_hex(a.color) << "\" stroke-width=\"2\"/>\n";
    }

    for (int x : d.crossings())
        svg << "  <circle cx=\"" << num(pos.at(x).x) << "\" cy=\"" << num(pos.at(x).y)
            << "\" r=\"2.5\" fill=\"#888888\"/>\n";

    for (int v : d.bridge_points()) {
        Pt p = pos.at(v);
        svg << "  <circle id=\"bp" << v << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
            << "\" r=\"4\" fill=\"black\"/>\n";
        svg << "  <text x=\"" << num(p.x + 6) << "\" y=\"" << num(p.y - 6)
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << v << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace trisect
