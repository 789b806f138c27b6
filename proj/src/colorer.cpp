#include "trisect/colorer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace trisect {

CubicGraph CubicGraph::validate(std::vector<UncoloredEdge> edges) {
    if (edges.empty()) throw Error(Err::NotCubic, "graph has no edges");
    std::sort(edges.begin(), edges.end(),
              [](const UncoloredEdge& a, const UncoloredEdge& b) { return a.id < b.id; });
    CubicGraph g;
    for (const UncoloredEdge& e : edges)
        if (e.u == e.v) throw Error(Err::SelfLoop, "edge " + std::to_string(e.id));
    std::map<int, std::vector<int>> at;
    for (const UncoloredEdge& e : edges) {
        at[e.u].push_back(e.id);
        at[e.v].push_back(e.id);
    }
    for (auto& [v, es] : at) {
        if (es.size() != 3)
            throw Error(Err::NotCubic, "vertex " + std::to_string(v) + " has valence " +
                                           std::to_string(es.size()));
        g.inc_[v] = {es[0], es[1], es[2]};
        g.vertices_.push_back(v);
    }
    std::map<int, const UncoloredEdge*> eptr;
    for (const UncoloredEdge& e : edges) eptr[e.id] = &e;
    std::set<int> seen{g.vertices_.front()};
    std::queue<int> bfs;
    bfs.push(g.vertices_.front());
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int eid : g.inc_[v]) {
            int w = eptr[eid]->other(v);
            if (seen.insert(w).second) bfs.push(w);
        }
    }
    if (seen.size() != g.vertices_.size())
        throw Error(Err::NotConnected, "graph is disconnected");
    g.edges_ = std::move(edges);
    return g;
}

const std::array<int, 3>& CubicGraph::incident(int v) const {
    auto it = inc_.find(v);
    if (it == inc_.end()) throw Error(Err::PreconditionViolated, "no vertex " + std::to_string(v));
    return it->second;
}

namespace {

std::string permuted_min_key(const TaitGraph& g) {
    static const std::array<std::array<Color, 3>, 6> perms{{
        {Color::R, Color::B, Color::G},
        {Color::R, Color::G, Color::B},
        {Color::B, Color::R, Color::G},
        {Color::B, Color::G, Color::R},
        {Color::G, Color::R, Color::B},
        {Color::G, Color::B, Color::R},
    }};
    std::string best;
    for (const auto& p : perms) {
        std::vector<Edge> edges;
        for (const Edge& e : g.edges())
            edges.push_back({e.id, e.u, e.v, p[static_cast<int>(e.color)]});
        std::string key = canonical_key(TaitGraph::validate(std::move(edges)));
        if (best.empty() || key < best) best = key;
    }
    return best;
}

}  // namespace

std::vector<TaitGraph> find_tait_colorings(const CubicGraph& g, int limit,
                                           bool up_to_color_permutation) {
    if (limit < 1) throw Error(Err::OutOfRange, "limit must be at least 1");
    // Order edges by BFS discovery so forward checking prunes early.
    std::map<int, const UncoloredEdge*> eptr;
    for (const UncoloredEdge& e : g.edges()) eptr[e.id] = &e;
    std::vector<int> order;
    std::set<int> ordered;
    std::set<int> seen{g.vertices().front()};
    std::queue<int> bfs;
    bfs.push(g.vertices().front());
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int eid : g.incident(v)) {
            if (ordered.insert(eid).second) order.push_back(eid);
            int w = eptr[eid]->other(v);
            if (seen.insert(w).second) bfs.push(w);
        }
    }
    std::map<int, Color> chosen;
    std::map<int, std::set<int>> used;  // vertex -> colors in use
    std::vector<TaitGraph> out;
    std::set<std::string> classes;
    auto free_at = [&](int v, Color c) { return !used[v].count(static_cast<int>(c)); };
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (static_cast<int>(out.size()) >= limit) return true;
        if (i == order.size()) {
            std::vector<Edge> edges;
            for (const UncoloredEdge& e : g.edges())
                edges.push_back({e.id, e.u, e.v, chosen[e.id]});
            TaitGraph colored = TaitGraph::validate(std::move(edges));
            if (up_to_color_permutation && !classes.insert(permuted_min_key(colored)).second)
                return false;
            out.push_back(std::move(colored));
            return static_cast<int>(out.size()) >= limit;
        }
        const UncoloredEdge& e = *eptr[order[i]];
        for (Color c : all_colors) {
            if (!free_at(e.u, c) || !free_at(e.v, c)) continue;
            chosen[e.id] = c;
            used[e.u].insert(static_cast<int>(c));
            used[e.v].insert(static_cast<int>(c));
            bool done = self(self, i + 1);
            used[e.u].erase(static_cast<int>(c));
            used[e.v].erase(static_cast<int>(c));
            if (done) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

namespace {

void partitions_desc(int m, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(m, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_desc(m - k, k, cur, out);
        cur.pop_back();
    }
}

void matchings(std::vector<int>& free, std::vector<std::array<int, 2>>& cur,
               const std::function<void(const std::vector<std::array<int, 2>>&)>& emit) {
    if (free.empty()) {
        emit(cur);
        return;
    }
    int a = free.front();
    for (size_t j = 1; j < free.size(); ++j) {
        int b = free[j];
        std::vector<int> rest;
        for (size_t t = 1; t < free.size(); ++t)
            if (t != j) rest.push_back(free[t]);
        cur.push_back({a, b});
        matchings(rest, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<TaitGraph> enumerate_small(int n) {
    if (n % 2 != 0) throw Error(Err::OddVertexCount, std::to_string(n));
    if (n < 2 || n > 12) throw Error(Err::OutOfRange, "n must be in [2,12]");
    int m = n / 2;
    // Red fixed as {2i,2i+1}. Blue canonical per red-blue cycle type: every
    // colored graph can be relabeled along its red-blue cycles into this form,
    // so the sweep below covers all classes; duplicates are removed by key.
    std::vector<std::vector<int>> types;
    std::vector<int> cur;
    partitions_desc(m, m, cur, types);
    std::map<std::string, TaitGraph> classes;
    for (const auto& type : types) {
        std::vector<std::array<int, 2>> red, blue;
        int base = 0;
        for (int k : type) {
            for (int i = 0; i < k; ++i) red.push_back({base + 2 * i, base + 2 * i + 1});
            for (int i = 0; i + 1 < k; ++i) blue.push_back({base + 2 * i + 1, base + 2 * i + 2});
            blue.push_back({base + 2 * k - 1, base});
            base += 2 * k;
        }
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        std::vector<std::array<int, 2>> greens;
        matchings(all, greens, [&](const std::vector<std::array<int, 2>>& green) {
            std::vector<Edge> edges;
            int id = 0;
            for (auto [u, v] : red) edges.push_back({id++, u, v, Color::R});
            for (auto [u, v] : blue) edges.push_back({id++, u, v, Color::B});
            for (auto [u, v] : green) edges.push_back({id++, u, v, Color::G});
            try {
                TaitGraph g = TaitGraph::validate(std::move(edges));
                std::string key = canonical_key(g);
                classes.emplace(std::move(key), std::move(g));
            } catch (const Error& e) {
                if (e.kind() != Err::NotConnected) throw;
            }
        });
    }
    std::vector<TaitGraph> out;
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

TaitGraph random_expanded_graph(int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TaitGraph g = TaitGraph::from_triples({{0, 1}, {0, 1}, {0, 1}}, {Color::R, Color::B, Color::G});
    for (int s = 0; s < steps; ++s) {
        const auto& es = g.edges();
        std::uniform_int_distribution<size_t> pick(0, es.size() - 1);
        Edge ea = es[pick(rng)];
        Edge eb = ea;
        while (eb.color == ea.color) eb = es[pick(rng)];
        bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        Color c = Color::R;
        for (Color cc : all_colors)
            if (cc != ea.color && cc != eb.color) c = cc;
        int x = *std::max_element(g.vertices().begin(), g.vertices().end()) + 1;
        int y = x + 1;
        int nid = g.edges().back().id + 1;
        std::vector<Edge> out;
        for (const Edge& e : g.edges())
            if (e.id != ea.id && e.id != eb.id) out.push_back(e);
        out.push_back({ea.id, ea.u, x, ea.color});
        out.push_back({nid, ea.v, y, ea.color});
        out.push_back({eb.id, eb.u, flip ? y : x, eb.color});
        out.push_back({nid + 1, eb.v, flip ? x : y, eb.color});
        out.push_back({nid + 2, x, y, c});
        g = TaitGraph::validate(std::move(out));
    }
    return g;
}

}  // namespace trisect
