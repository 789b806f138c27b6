#pragma once

#include <string>

#include "trisect/diagram.hpp"

namespace trisect {

struct RenderSpec {
    ColorPair pair = ColorPair::RB;  // pairing drawn as regular polygons
    double scale = 1.0;
};

// Standalone SVG picture of the diagram: the chosen pairing's closed curves
// as regular polygons (one bridge point per corner), third-color arcs as
// chords or polylines through their crossings. Every bridge point and arc is
// drawn exactly once. A non-standard pairing is standardized first, recorded
// in an SVG comment.
std::string render_svg(const ShadowDiagram& d, const RenderSpec& spec = {});

}  // namespace trisect
