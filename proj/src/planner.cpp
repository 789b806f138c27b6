#include "trisect/planner.hpp"

#include <algorithm>
#include <numeric>

namespace trisect {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::P: return "P";
        case StepKind::C: return "C";
        case StepKind::T: return "T";
    }
    return "?";
}

namespace {

int patch_sum(const TaitGraph& g) {
    auto p = surface_profile(g).patch_numbers;
    return p[0] + p[1] + p[2];
}

bool is_one_patch(const TaitGraph& g) {
    auto p = surface_profile(g).patch_numbers;
    return p[0] == 1 && p[1] == 1 && p[2] == 1;
}

// Lowest-id edge of the given class whose compression yields a valid graph.
// Compression of a cut-pair edge can disconnect, so candidates are tried.
std::optional<std::pair<TaitGraph, int>> try_compress_class(const TaitGraph& g, EdgeClass want) {
    for (const Edge& e : g.edges()) {
        if (g.has_parallel_partner(e.id)) continue;
        if (classify_edge(g, e.id) != want) continue;
        try {
            auto [h, cls] = compress(g, e.id);
            return std::make_pair(std::move(h), e.id);
        } catch (const Error& err) {
            if (err.kind() != Err::NotConnected) throw;
        }
    }
    return std::nullopt;
}

CompressionStep make_step(const TaitGraph& pre, int eid, StepKind kind, TaitGraph post) {
    return {eid, kind, pre.edge(eid), pre, std::move(post)};
}

}  // namespace

CompressionPlan reduce_to_one_patch(const TaitGraph& g) {
    CompressionPlan plan{g, g, {}};
    TaitGraph cur = g;
    while (patch_sum(cur) > 3) {
        auto got = try_compress_class(cur, EdgeClass::Connecting);
        if (!got)
            throw Error(Err::MoveRealizationFailed,
                        "no usable connecting edge despite patch sum > 3");
        plan.steps.push_back(make_step(cur, got->second, StepKind::P, got->first));
        cur = std::move(got->first);
    }
    plan.final = cur;
    return plan;
}

CompressionPlan reduce_orientable(const TaitGraph& g) {
    if (!is_one_patch(g)) throw Error(Err::NotOnePatch, "graph is not 1-patch");
    if (!is_bipartite(g)) throw Error(Err::NotOrientable, "graph is not bipartite");
    CompressionPlan plan{g, g, {}};
    TaitGraph cur = g;
    while (!cur.is_theta()) {
        // In a 1-patch bipartite graph every edge is orientation-preserving.
        auto t = try_compress_class(cur, EdgeClass::OrientationPreserving);
        if (!t) throw Error(Err::MoveRealizationFailed, "no usable t-compression edge");
        plan.steps.push_back(make_step(cur, t->second, StepKind::T, t->first));
        cur = std::move(t->first);
        auto p = try_compress_class(cur, EdgeClass::Connecting);
        if (!p) throw Error(Err::MoveRealizationFailed, "no usable p-compression edge after T");
        plan.steps.push_back(make_step(cur, p->second, StepKind::P, p->first));
        cur = std::move(p->first);
    }
    plan.final = cur;
    return plan;
}

int choose_c_edge(const TaitGraph& g) {
    if (!is_one_patch(g)) throw Error(Err::NotOnePatch, "graph is not 1-patch");
    if (is_bipartite(g)) throw Error(Err::PreconditionViolated, "graph is orientable");
    auto acceptable = [&](int eid) {
        try {
            auto [h, cls] = compress(g, eid);
            return h.is_theta() || !is_bipartite(h);
        } catch (const Error& err) {
            if (err.kind() != Err::NotConnected) throw;
            return false;
        }
    };
    std::vector<int> reversing;
    for (const Edge& e : g.edges()) {
        if (g.has_parallel_partner(e.id)) continue;
        if (classify_edge(g, e.id) == EdgeClass::OrientationReversing) reversing.push_back(e.id);
    }
    if (!reversing.empty()) {
        Color preferred = g.edge(reversing.front()).color;
        for (int eid : reversing)
            if (g.edge(eid).color == preferred && acceptable(eid)) return eid;
        for (int eid : reversing)
            if (acceptable(eid)) return eid;  // fallback across colors; not expected
    }
    throw Error(Err::MoveRealizationFailed, "no orientation-reversing edge keeps the graph usable");
}

CompressionPlan reduce_nonorientable(const TaitGraph& g) {
    if (!is_one_patch(g)) throw Error(Err::NotOnePatch, "graph is not 1-patch");
    if (is_bipartite(g)) throw Error(Err::PreconditionViolated, "graph is orientable");
    CompressionPlan plan{g, g, {}};
    TaitGraph cur = g;
    while (!cur.is_theta()) {
        int eid = choose_c_edge(cur);
        auto [next, cls] = compress(cur, eid);
        if (!is_one_patch(next))
            throw Error(Err::MoveRealizationFailed, "c-compression left more than one patch");
        plan.steps.push_back(make_step(cur, eid, StepKind::C, next));
        cur = std::move(next);
    }
    plan.final = cur;
    return plan;
}

CompressionPlan plan(const TaitGraph& g) {
    CompressionPlan out = reduce_to_one_patch(g);
    const TaitGraph& mid = out.final;
    if (!mid.is_theta()) {
        CompressionPlan rest = is_bipartite(mid) ? reduce_orientable(mid) : reduce_nonorientable(mid);
        for (auto& s : rest.steps) out.steps.push_back(std::move(s));
        out.final = std::move(rest.final);
    }
    if (static_cast<int>(out.steps.size()) != (g.n() - 2) / 2)
        throw Error(Err::MoveRealizationFailed, "plan length differs from (|V|-2)/2");
    return out;
}

}  // namespace trisect
