#pragma once

#include <utility>
#include <vector>

#include "trisect/moves.hpp"

namespace trisect {

// Crossings whose two transversal arcs both carry colors of `pair`.
int pair_crossing_count(const ShadowDiagram& d, ColorPair pair);

// Rewrites d with local moves until `pair` is standard. The 1-skeleton is
// preserved up to colored isomorphism, and replaying the returned moves on d
// reproduces the returned diagram bit for bit. Crossings between the pair's
// colors are resolved by splitting them off into a third-color connector and
// contracting another connector elsewhere; an embedded but non-standard
// pairing falls back to a bounded breadth-first search over arc slides.
// Throws StandardizationFailed when the bounded search exhausts.
std::pair<ShadowDiagram, std::vector<Move>> standardize(const ShadowDiagram& d, ColorPair pair);

}  // namespace trisect
