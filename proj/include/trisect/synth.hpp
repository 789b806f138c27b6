#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisect/moves.hpp"
#include "trisect/planner.hpp"

namespace trisect {

struct Schedule {
    int n_plus = 0;
    int n_minus = 0;

    bool operator==(const Schedule&) const = default;
};

// Splits `crosscaps` signed projective-plane summands so the normal Euler
// numbers (+2 each plus, -2 each minus) total e: n_plus = (2*crosscaps+e)/4.
// Throws OutOfRange when |e| > 2*crosscaps and ParityMismatch when
// e is odd or e != 2*crosscaps (mod 4).
Schedule euler_schedule(int crosscaps, int e);

struct SynthesisTrace {
    std::vector<Move> moves;  // replayable from the theta diagram
    int n_plus = 0;
    int n_minus = 0;
    std::vector<TaitGraph> skeletons;  // after each move
};

struct SurfaceCertificate {
    bool orientable = false;
    int genus = 0;  // orientable genus, or crosscap number when nonorientable
    int euler_characteristic = 2;
    int euler_number = 0;
    int n_plus = 0;
    int n_minus = 0;
    int bridge_points = 0;
    std::map<int, int> iso_witness;  // diagram bridge point -> input graph vertex
};

struct SynthesisResult {
    ShadowDiagram diagram;
    SynthesisTrace trace;
    SurfaceCertificate certificate;
};

// Observation point for tests: fires with the diagram as it is immediately
// before each crosscap summation, plus the chosen darts and sign.
struct CrosscapEvent {
    ShadowDiagram before;
    ColorPair pair = ColorPair::RB;
    Dart dart_a{};
    Dart dart_b{};
    int sign = +1;
};
using CrosscapObserver = std::function<void(const CrosscapEvent&)>;

// Builds a genus-0 shadow diagram whose 1-skeleton is colored-isomorphic to g
// by replaying plan(g) backwards from the theta diagram: perturbs undo
// connecting compressions, tubes undo orientation-preserving ones, and signed
// crosscap summations (each followed by standardization) undo
// orientation-reversing ones. euler_number may only be given for
// nonorientable graphs; the default is 0 for an even crosscap number and +2
// for an odd one. Deterministic.
SynthesisResult synthesize(const TaitGraph& g, std::optional<int> euler_number = {},
                           const CrosscapObserver& observer = {});

// Applies a move list starting from the theta diagram.
ShadowDiagram replay(const std::vector<Move>& moves);

struct VerifyReport {
    bool skeleton_isomorphic = false;
    bool sphere_map = false;
    bool curves_match_patches = false;
    bool characteristic_consistent = false;
    bool trace_replays = false;
    bool euler_in_range = false;
    std::vector<std::string> notes;  // human detail for each failure

    bool all() const {
        return skeleton_isomorphic && sphere_map && curves_match_patches &&
               characteristic_consistent && trace_replays && euler_in_range;
    }
};

// Independent end-to-end checks of a synthesis output. Never throws; each
// failed check adds a note.
VerifyReport verify(const TaitGraph& g, const ShadowDiagram& d, const SynthesisTrace& trace,
                    const SurfaceCertificate& cert);

}  // namespace trisect
