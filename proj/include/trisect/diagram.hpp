#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trisect/color.hpp"
#include "trisect/error.hpp"
#include "trisect/graph.hpp"

namespace trisect {

// Oriented half-segment of an arc. Arc segments are numbered 0..|via|; segment
// s runs between node s and node s+1 of the chain ends[0], via..., ends[1].
// A dart is based at (and points away from) the node given by its `end` bit.
struct Dart {
    int arc = -1;
    int seg = 0;
    int end = 0;  // 0: based at the lower node of the segment, 1: at the upper

    auto operator<=>(const Dart&) const = default;
};

struct Arc {
    int id = 0;
    Color color = Color::R;
    std::array<int, 2> ends{};  // bridge points
    std::vector<int> via;       // crossings traversed, in order from ends[0]

    bool operator==(const Arc&) const = default;
    int segments() const { return static_cast<int>(via.size()) + 1; }
};

struct PairingReport {
    ColorPair pair = ColorPair::RB;
    bool embedded = false;
    int closed_curves = 0;
    bool standard = false;

    bool operator==(const PairingReport&) const = default;
};

// Raw mutable pieces of a diagram, used while applying moves.
struct DiagramData {
    std::vector<int> bridge_points;
    std::vector<int> crossings;
    std::vector<Arc> arcs;
    std::map<int, std::vector<Dart>> rotation;  // vertex -> incident darts, ccw

    bool operator==(const DiagramData&) const = default;
};

// A genus-0 combinatorial map: bridge points of valence 3 (one arc-end per
// color), crossings of valence 4 (two arcs interleaved), and a rotation
// system. Faces are traced with next = sigma(alpha(d)) and lie to the RIGHT
// of their darts. Immutable; moves build new diagrams.
class ShadowDiagram {
  public:
    // Validates everything, including the Euler characteristic (V-E+F = 2,
    // which also forces the map to be connected).
    static ShadowDiagram build(DiagramData data);

    // Two bridge points, three parallel arcs, no crossings.
    static ShadowDiagram theta();

    const std::vector<int>& bridge_points() const { return data_.bridge_points; }
    const std::vector<int>& crossings() const { return data_.crossings; }
    const std::vector<Arc>& arcs() const { return data_.arcs; }  // sorted by id
    const std::map<int, std::vector<Dart>>& rotation() const { return data_.rotation; }
    const DiagramData& data() const { return data_; }

    const Arc& arc(int id) const;
    bool has_arc(int id) const;
    bool is_bridge_point(int v) const { return bp_.count(v) != 0; }
    bool is_crossing(int v) const { return x_.count(v) != 0; }
    // Arc id of the color-c end at bridge point v.
    int arc_at(int v, Color c) const;

    int vertex_of(const Dart& d) const;
    Dart alpha(const Dart& d) const;  // other end of the same segment
    Dart sigma(const Dart& d) const;  // ccw-next at the base vertex
    Dart phi(const Dart& d) const { return sigma(alpha(d)); }

    // Face orbits; each orbit listed from its least dart, orbits sorted.
    const std::vector<std::vector<Dart>>& faces() const;
    int face_of(const Dart& d) const;

    int edge_count() const;  // total segments
    int euler_characteristic() const;

    // Bridge points + arcs as a Tait-colored graph; crossings forgotten.
    // Throws DisconnectedSkeleton when the matchings do not connect.
    TaitGraph skeleton() const;

    // Closed curves of the pair's two matchings, as cyclic bridge-point lists
    // (canonical order, as in bicolored_cycles).
    std::vector<std::vector<int>> pairing_curves(ColorPair pair) const;
    int curve_of(int bp, ColorPair pair) const;

    // True when none of the curve's arcs crosses the pairing's other system:
    // such a curve is embedded and bounds reconnection disks on both sides
    // even while other curves of the pairing stay crossed.
    bool curve_embedded(int curve, ColorPair pair) const;

    PairingReport pairing_report(ColorPair pair) const;

    // Same diagram with every rotation reversed (the mirror image).
    ShadowDiagram mirrored() const;

    bool operator==(const ShadowDiagram& o) const { return data_ == o.data_; }

  private:
    ShadowDiagram() = default;
    void index();
    DiagramData data_;
    std::set<int> bp_, x_;
    std::map<int, int> aidx_;
    std::map<std::pair<int, int>, int> end_arc_;  // (bp, color) -> arc id
    // Lazily built caches (value-semantic copies keep them consistent because
    // the diagram is immutable after build()).
    mutable std::vector<std::vector<Dart>> faces_;
    mutable std::map<Dart, int> face_idx_;
};

// Color- and rotation-preserving dart bijection (orientation-preserving, so a
// diagram and its mirror are generally not isomorphic). Deterministic.
std::optional<std::map<Dart, Dart>> map_isomorphic(const ShadowDiagram& a, const ShadowDiagram& b);

std::string to_string(const Dart& d);

}  // namespace trisect
