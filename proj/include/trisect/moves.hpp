#pragma once

#include <memory>
#include <vector>

#include "trisect/diagram.hpp"

namespace trisect {

enum class MoveKind { Perturb, Deperturb, Crosscap, Tube, ConnectSum, Slide, Split };

const char* to_string(MoveKind k);

// A recorded surgery, replayable with apply_move. Which fields are meaningful
// depends on the kind; unused ones keep their defaults.
struct Move {
    MoveKind kind = MoveKind::Perturb;
    ColorPair pair = ColorPair::RB;  // perturb / crosscap / tube
    Dart dart_a{};                   // perturb/crosscap/tube; slide: dart on the sliding arc
    Dart dart_b{};                   // perturb/crosscap/tube; slide: dart on the arc slid over
    int sign = +1;                   // crosscap: +1 or -1
    int arc = -1;                    // deperturb: connector arc id
    int crossing = -1;               // split: crossing id
    int diagonal = 0;                // split: 0 or 1
    int x1 = -1;                     // connect_sum: junction in the base diagram
    int x2 = -1;                     // connect_sum: junction in the summand
    std::vector<Dart> path;          // perturb/crosscap/tube: connector route
    std::shared_ptr<const ShadowDiagram> other;  // connect_sum summand

    static Move perturb(ColorPair p, Dart a, Dart b, std::vector<Dart> path = {});
    static Move deperturb(int connector_arc);
    static Move crosscap(ColorPair p, Dart a, Dart b, int sign, std::vector<Dart> path = {});
    static Move tube(ColorPair p, Dart a, Dart b, std::vector<Dart> path = {});
    static Move connect_sum(int x1, ShadowDiagram other, int x2);
    static Move slide(Dart on_arc, Dart over);
    static Move split(int crossing, int diagonal);
};

struct MoveResult {
    ShadowDiagram diagram;
    int bp_x = -1;          // perturb/tube: vx; crosscap: the + side; split: x1
    int bp_y = -1;          // perturb/tube: vy; crosscap: the - side; split: x2
    int new_arc = -1;       // connector arc created by perturb/crosscap/tube/split
    int new_crossing = -1;  // crosscap / crossing-flavor deperturb
};

// The three pair reconnections run a third-color connector from a point on
// dart_a's side of its arc to one on dart_b's side. The connector stays clear
// of the pair's two colors but may cross third-color arcs: `path` lists, in
// order, the segment darts it crosses (each with the face the connector comes
// FROM on its right), which chains the faces from face_of(da) to face_of(db).
// An empty path needs the two darts on one face.

// Uncrossed reconnection of two pairing arcs; both darts must lie on the same
// pairing curve. Splits that curve in two.
MoveResult perturb(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db,
                   const std::vector<Dart>& path = {});

// The same reconnection between two DISTINCT pairing curves; merges them.
MoveResult tube(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db,
                const std::vector<Dart>& path = {});

// Crossed reconnection on one pairing curve: adds one crossing between the
// two reattached strands. sign selects the chirality (+1 or -1).
MoveResult crosscap_sum(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db, int sign,
                        const std::vector<Dart>& path = {});

// Contracts a crossing-free connector arc whose endpoints lie on distinct
// pairing curves, merging the like-colored arcs at its ends. Reattaches
// without a crossing when the end rotations are mirror images of each other,
// and with one new crossing when they agree.
MoveResult deperturb(const ShadowDiagram& d, int connector_arc);

// Replaces a crossing between two different-colored arcs by two bridge points
// joined by a new arc of the third color. diagonal picks which pair of the
// four strands is capped together first (0 or 1, relative to the stored
// rotation at the crossing).
MoveResult split_crossing(const ShadowDiagram& d, int crossing, int diagonal);

// Glues two diagrams at a bridge point of each, splicing the three
// like-colored arc ends. The rotational color orders at the two junctions
// must be opposite.
MoveResult connect_sum(const ShadowDiagram& d1, int x1, const ShadowDiagram& d2, int x2);

// Slides the arc of dart_a over the whole arc of dart_over (same color,
// sharing the face to the right of both darts), dragging it around the far
// side. Crossings created with every arc met on the way; the result is then
// reduced by removing bigon faces until none remain.
MoveResult slide(const ShadowDiagram& d, Dart dart_a, Dart dart_over);

MoveResult apply_move(const ShadowDiagram& d, const Move& m);

}  // namespace trisect
