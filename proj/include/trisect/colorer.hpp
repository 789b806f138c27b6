#pragma once

#include <cstdint>
#include <vector>

#include "trisect/graph.hpp"

namespace trisect {

struct UncoloredEdge {
    int id = 0;
    int u = 0;
    int v = 0;

    int other(int w) const { return w == u ? v : u; }
};

// A connected cubic multigraph without colors (no self-loops).
class CubicGraph {
  public:
    static CubicGraph validate(std::vector<UncoloredEdge> edges);
    const std::vector<UncoloredEdge>& edges() const { return edges_; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::array<int, 3>& incident(int v) const;

  private:
    CubicGraph() = default;
    std::vector<UncoloredEdge> edges_;
    std::vector<int> vertices_;
    std::map<int, std::array<int, 3>> inc_;  // vertex -> three incident edge ids
};

// Backtracking search for proper 3-edge-colorings. Returns up to `limit`
// colorings in a deterministic order; exhaustive when fewer exist. With
// `up_to_color_permutation`, colorings equal after permuting the three color
// names are reported once.
std::vector<TaitGraph> find_tait_colorings(const CubicGraph& g, int limit,
                                           bool up_to_color_permutation = false);

// All connected Tait-colored cubic graphs on n vertices, one per
// colored-isomorphism class, in canonical-key order. n even, 2 <= n <= 12.
std::vector<TaitGraph> enumerate_small(int n);

// Random valid graph grown from the theta graph by `steps` inverse
// compressions (result has 2 + 2*steps vertices). Deterministic per seed.
TaitGraph random_expanded_graph(int steps, std::uint64_t seed);

}  // namespace trisect
