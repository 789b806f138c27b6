#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisect/color.hpp"
#include "trisect/error.hpp"

namespace trisect {

struct Edge {
    int id = 0;
    int u = 0;
    int v = 0;
    Color color = Color::R;

    bool operator==(const Edge&) const = default;
    int other(int w) const { return w == u ? v : u; }
    bool touches(int w) const { return u == w || v == w; }
};

// A connected cubic multigraph with a proper 3-edge-coloring. Immutable after
// construction; all operations return new graphs.
class TaitGraph {
  public:
    // Checks all invariants (cubic, connected, one edge of each color per
    // vertex, no self-loops) and throws on the first violation.
    static TaitGraph validate(std::vector<Edge> edges);

    // Convenience: assigns edge ids 0..k-1 in input order, then validates.
    static TaitGraph from_triples(const std::vector<std::array<int, 2>>& ends,
                                  const std::vector<Color>& colors);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted by id
    int n() const { return static_cast<int>(vertices_.size()); }

    const Edge& edge(int id) const;
    bool has_vertex(int v) const { return inc_.count(v) != 0; }
    // Edge id of the unique c-colored edge at v.
    int incident(int v, Color c) const;
    const std::array<int, 3>& incident(int v) const;

    bool is_theta() const { return n() == 2; }
    // True if some other edge joins the same endpoints.
    bool has_parallel_partner(int edge_id) const;

    bool operator==(const TaitGraph&) const = default;

  private:
    TaitGraph() = default;
    std::vector<Edge> edges_;
    std::vector<int> vertices_;
    std::map<int, std::array<int, 3>> inc_;  // vertex -> edge id, indexed by Color
    std::map<int, int> eidx_;                // edge id -> index into edges_
};

struct BicoloredCycle {
    ColorPair pair;
    std::vector<int> vertices;  // cyclic; edges[i] joins vertices[i], vertices[i+1 mod]
    std::vector<int> edges;
};

// The cycles of the two matchings of `pair`; they partition the vertex set.
// Canonical order: each cycle starts at its least vertex and first follows the
// pair's first color; cycles sorted by least vertex.
std::vector<BicoloredCycle> bicolored_cycles(const TaitGraph& g, ColorPair pair);

struct SurfaceProfile {
    std::array<int, 3> patch_numbers{};  // (RB, BG, GR)
    bool orientable = false;
    int euler_characteristic = 0;
    int genus = 0;  // orientable genus, or crosscap number when nonorientable

    bool operator==(const SurfaceProfile&) const = default;
};

bool is_bipartite(const TaitGraph& g);

// Invariants of the closed surface induced by capping every bi-colored cycle
// with a disk: chi = -|V|/2 + p1 + p2 + p3; orientable iff bipartite.
SurfaceProfile surface_profile(const TaitGraph& g);

enum class EdgeClass { OrientationPreserving, OrientationReversing, Connecting };

const char* to_string(EdgeClass k);

// Classification of a non-parallel edge against the cycles of its opposite
// color pair: Connecting if the endpoints lie on distinct cycles; otherwise
// orientation-preserving iff their distance along the cycle is odd.
EdgeClass classify_edge(const TaitGraph& g, int edge_id);

// Removes the edge and its endpoints, merging the two same-colored edge pairs
// left dangling at those endpoints. The merged edges reuse the smaller of the
// two old ids. Returns the result plus the pre-compression classification.
std::pair<TaitGraph, EdgeClass> compress(const TaitGraph& g, int edge_id);

struct PatchDelta {
    ColorPair pair;  // the pair opposite to the edge's color
    int delta;       // -1 / 0 / +1 for Connecting / Reversing / Preserving
};

// Predicted change of the opposite-pair patch number under compress(g, e).
PatchDelta patch_delta_check(const TaitGraph& g, int edge_id);

// Deletes v1 and v2 and joins the dangling edge-ends by matching color.
// Vertices/edges of g2 are shifted above g1's ids; joined edges keep g1's ids.
TaitGraph vertex_sum(const TaitGraph& g1, int v1, const TaitGraph& g2, int v2);

// Color-preserving isomorphism (exact colors, not up to permutation).
// Returns a vertex bijection g1 -> g2 when one exists. Deterministic.
std::optional<std::map<int, int>> colored_isomorphic(const TaitGraph& g1, const TaitGraph& g2);

// Canonical key: two graphs have equal keys iff colored_isomorphic succeeds.
std::string canonical_key(const TaitGraph& g);

}  // namespace trisect
