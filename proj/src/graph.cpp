#include "trisect/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace trisect {

const char* to_string(EdgeClass k) {
    switch (k) {
        case EdgeClass::OrientationPreserving: return "OrientationPreserving";
        case EdgeClass::OrientationReversing: return "OrientationReversing";
        case EdgeClass::Connecting: return "Connecting";
    }
    return "?";
}

TaitGraph TaitGraph::validate(std::vector<Edge> edges) {
    if (edges.empty()) throw Error(Err::NotCubic, "graph has no edges");
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    TaitGraph g;
    std::set<int> ids;
    for (const Edge& e : edges) {
        if (!ids.insert(e.id).second)
            throw Error(Err::PreconditionViolated, "duplicate edge id " + std::to_string(e.id));
        if (e.u < 0 || e.v < 0)
            throw Error(Err::PreconditionViolated, "negative vertex id on edge " + std::to_string(e.id));
        if (e.u == e.v) throw Error(Err::SelfLoop, "edge " + std::to_string(e.id));
    }
    std::map<int, std::vector<const Edge*>> at;
    for (const Edge& e : edges) {
        at[e.u].push_back(&e);
        at[e.v].push_back(&e);
    }
    for (const auto& [v, es] : at) {
        if (es.size() != 3)
            throw Error(Err::NotCubic, "vertex " + std::to_string(v) + " has valence " +
                                           std::to_string(es.size()));
        std::array<int, 3> slot{-1, -1, -1};
        for (const Edge* e : es) {
            int c = static_cast<int>(e->color);
            if (slot[c] != -1)
                throw Error(Err::NotTaitColored, "vertex " + std::to_string(v) +
                                                     " has two " + to_string(e->color) + " edges");
            slot[c] = e->id;
        }
        g.inc_[v] = slot;
        g.vertices_.push_back(v);
    }
    // Connectivity by BFS over the incidence table.
    std::set<int> seen{g.vertices_.front()};
    std::queue<int> bfs;
    bfs.push(g.vertices_.front());
    std::map<int, const Edge*> eptr;
    for (const Edge& e : edges) eptr[e.id] = &e;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int eid : g.inc_[v]) {
            int w = eptr[eid]->other(v);
            if (seen.insert(w).second) bfs.push(w);
        }
    }
    if (seen.size() != g.vertices_.size()) {
        int missing = 0;
        for (int v : g.vertices_)
            if (!seen.count(v)) {
                missing = v;
                break;
            }
        throw Error(Err::NotConnected, "vertex " + std::to_string(missing) +
                                           " unreachable from vertex " +
                                           std::to_string(g.vertices_.front()));
    }
    g.edges_ = std::move(edges);
    for (size_t i = 0; i < g.edges_.size(); ++i) g.eidx_[g.edges_[i].id] = static_cast<int>(i);
    return g;
}

TaitGraph TaitGraph::from_triples(const std::vector<std::array<int, 2>>& ends,
                                  const std::vector<Color>& colors) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < ends.size(); ++i)
        edges.push_back({static_cast<int>(i), ends[i][0], ends[i][1], colors[i]});
    return validate(std::move(edges));
}

const Edge& TaitGraph::edge(int id) const {
    auto it = eidx_.find(id);
    if (it == eidx_.end()) throw Error(Err::PreconditionViolated, "no edge " + std::to_string(id));
    return edges_[it->second];
}

int TaitGraph::incident(int v, Color c) const { return incident(v)[static_cast<int>(c)]; }

const std::array<int, 3>& TaitGraph::incident(int v) const {
    auto it = inc_.find(v);
    if (it == inc_.end()) throw Error(Err::PreconditionViolated, "no vertex " + std::to_string(v));
    return it->second;
}

bool TaitGraph::has_parallel_partner(int edge_id) const {
    const Edge& e = edge(edge_id);
    for (const Edge& f : edges_)
        if (f.id != e.id && ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u))) return true;
    return false;
}

std::vector<BicoloredCycle> bicolored_cycles(const TaitGraph& g, ColorPair pair) {
    auto cs = colors_of(pair);
    std::set<int> todo(g.vertices().begin(), g.vertices().end());
    std::vector<BicoloredCycle> out;
    while (!todo.empty()) {
        int start = *todo.begin();
        BicoloredCycle cyc;
        cyc.pair = pair;
        int v = start;
        int turn = 0;  // alternate cs[0], cs[1]
        do {
            cyc.vertices.push_back(v);
            todo.erase(v);
            int eid = g.incident(v, cs[turn % 2]);
            cyc.edges.push_back(eid);
            v = g.edge(eid).other(v);
            ++turn;
        } while (v != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

bool is_bipartite(const TaitGraph& g) {
    std::map<int, int> side;
    std::queue<int> bfs;
    side[g.vertices().front()] = 0;
    bfs.push(g.vertices().front());
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int eid : g.incident(v)) {
            int w = g.edge(eid).other(v);
            auto it = side.find(w);
            if (it == side.end()) {
                side[w] = 1 - side[v];
                bfs.push(w);
            } else if (it->second == side[v]) {
                return false;
            }
        }
    }
    return true;
}

SurfaceProfile surface_profile(const TaitGraph& g) {
    SurfaceProfile p;
    for (ColorPair pair : all_pairs)
        p.patch_numbers[static_cast<int>(pair)] =
            static_cast<int>(bicolored_cycles(g, pair).size());
    p.orientable = is_bipartite(g);
    int sum = p.patch_numbers[0] + p.patch_numbers[1] + p.patch_numbers[2];
    p.euler_characteristic = -g.n() / 2 + sum;
    p.genus = p.orientable ? (2 - p.euler_characteristic) / 2 : 2 - p.euler_characteristic;
    return p;
}

EdgeClass classify_edge(const TaitGraph& g, int edge_id) {
    const Edge& e = g.edge(edge_id);
    if (g.has_parallel_partner(edge_id))
        throw Error(Err::ParallelEdge, "edge " + std::to_string(edge_id) + " is parallel");
    auto cycles = bicolored_cycles(g, opposite(e.color));
    const BicoloredCycle* cu = nullptr;
    const BicoloredCycle* cv = nullptr;
    for (const auto& c : cycles) {
        for (int v : c.vertices) {
            if (v == e.u) cu = &c;
            if (v == e.v) cv = &c;
        }
    }
    if (cu != cv) return EdgeClass::Connecting;
    int iu = -1, iv = -1;
    for (size_t i = 0; i < cu->vertices.size(); ++i) {
        if (cu->vertices[i] == e.u) iu = static_cast<int>(i);
        if (cu->vertices[i] == e.v) iv = static_cast<int>(i);
    }
    int dist = std::abs(iu - iv);  // both distances around the cycle share parity
    return dist % 2 == 1 ? EdgeClass::OrientationPreserving : EdgeClass::OrientationReversing;
}

std::pair<TaitGraph, EdgeClass> compress(const TaitGraph& g, int edge_id) {
    if (g.is_theta()) throw Error(Err::ThetaGraph, "nothing to compress");
    EdgeClass cls = classify_edge(g, edge_id);  // throws ParallelEdge first
    const Edge& e = g.edge(edge_id);
    std::vector<Edge> out;
    for (const Edge& f : g.edges())
        if (!f.touches(e.u) && !f.touches(e.v)) out.push_back(f);
    for (Color c : all_colors) {
        if (c == e.color) continue;
        const Edge& fu = g.edge(g.incident(e.u, c));
        const Edge& fv = g.edge(g.incident(e.v, c));
        out.push_back({std::min(fu.id, fv.id), fu.other(e.u), fv.other(e.v), c});
    }
    return {TaitGraph::validate(std::move(out)), cls};
}

PatchDelta patch_delta_check(const TaitGraph& g, int edge_id) {
    EdgeClass cls = classify_edge(g, edge_id);
    if (g.is_theta()) throw Error(Err::ThetaGraph, "nothing to compress");
    int delta = cls == EdgeClass::Connecting ? -1
                : cls == EdgeClass::OrientationPreserving ? 1
                                                          : 0;
    return {opposite(g.edge(edge_id).color), delta};
}

TaitGraph vertex_sum(const TaitGraph& g1, int v1, const TaitGraph& g2, int v2) {
    g1.incident(v1);  // membership checks
    g2.incident(v2);
    int voff = *std::max_element(g1.vertices().begin(), g1.vertices().end()) + 1;
    int eoff = g1.edges().back().id + 1;
    std::vector<Edge> out;
    for (const Edge& e : g1.edges())
        if (!e.touches(v1)) out.push_back(e);
    for (const Edge& e : g2.edges())
        if (!e.touches(v2)) out.push_back({e.id + eoff, e.u + voff, e.v + voff, e.color});
    for (Color c : all_colors) {
        const Edge& e1 = g1.edge(g1.incident(v1, c));
        const Edge& e2 = g2.edge(g2.incident(v2, c));
        out.push_back({e1.id, e1.other(v1), e2.other(v2) + voff, c});
    }
    return TaitGraph::validate(std::move(out));
}

namespace {

// Deterministic labeling: BFS from `root`, visiting each vertex's neighbors in
// color order. For connected colored cubic graphs this fixes the labeling
// completely, so the minimum over roots is a canonical form.
std::pair<std::string, std::map<int, int>> rooted_key(const TaitGraph& g, int root) {
    std::map<int, int> label;
    std::vector<int> order;
    label[root] = 0;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (Color c : all_colors) {
            int w = g.edge(g.incident(v, c)).other(v);
            if (!label.count(w)) {
                label[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    std::ostringstream key;
    for (int v : order)
        for (Color c : all_colors) key << label[g.edge(g.incident(v, c)).other(v)] << ',';
    return {key.str(), std::move(label)};
}

}  // namespace

std::string canonical_key(const TaitGraph& g) {
    std::string best;
    for (int v : g.vertices()) {
        auto [key, label] = rooted_key(g, v);
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::optional<std::map<int, int>> colored_isomorphic(const TaitGraph& g1, const TaitGraph& g2) {
    if (g1.n() != g2.n()) return std::nullopt;
    std::string best1;
    std::map<int, int> lab1;
    for (int v : g1.vertices()) {
        auto [key, label] = rooted_key(g1, v);
        if (best1.empty() || key < best1) {
            best1 = key;
            lab1 = std::move(label);
        }
    }
    std::string best2;
    std::map<int, int> lab2;
    for (int v : g2.vertices()) {
        auto [key, label] = rooted_key(g2, v);
        if (best2.empty() || key < best2) {
            best2 = key;
            lab2 = std::move(label);
        }
    }
    if (best1 != best2) return std::nullopt;
    std::map<int, int> inv2;  // canonical label -> g2 vertex
    for (const auto& [v, l] : lab2) inv2[l] = v;
    std::map<int, int> out;
    for (const auto& [v, l] : lab1) out[v] = inv2[l];
    return out;
}

}  // namespace trisect
