#pragma once

#include <vector>

#include "trisect/graph.hpp"

namespace trisect {

enum class StepKind { P, C, T };

const char* to_string(StepKind k);

struct CompressionStep {
    int edge_id;  // in pre_graph
    StepKind kind;
    Edge edge;  // snapshot of the compressed edge
    TaitGraph pre_graph;
    TaitGraph post_graph;
};

struct CompressionPlan {
    TaitGraph initial;
    TaitGraph final;
    std::vector<CompressionStep> steps;
};

// P-compressions along connecting edges (lowest edge id first) until every
// patch number is 1. Step count: p1 + p2 + p3 - 3.
CompressionPlan reduce_to_one_patch(const TaitGraph& g);

// For a 1-patch orientable graph (not theta): strictly alternating T,P steps
// ending at theta. Length (|V|-2)/2.
CompressionPlan reduce_orientable(const TaitGraph& g);

// For a 1-patch nonorientable graph: an orientation-reversing edge whose
// compression is nonorientable or theta, preferring candidates of one color.
int choose_c_edge(const TaitGraph& g);

// For a 1-patch nonorientable graph: C steps to theta, every intermediate
// 1-patch. Length (|V|-2)/2.
CompressionPlan reduce_nonorientable(const TaitGraph& g);

// Full pipeline: P steps to one patch, then the orientable or nonorientable
// reduction. Ends at theta; total length (|V|-2)/2.
CompressionPlan plan(const TaitGraph& g);

}  // namespace trisect
