#include "trisect/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trisect {

std::string to_string(const Dart& d) {
    std::ostringstream s;
    s << '(' << d.arc << ',' << d.seg << ',' << d.end << ')';
    return s.str();
}

namespace {

int node_of(const Arc& a, int idx) {
    // Node idx along the chain ends[0], via..., ends[1].
    if (idx == 0) return a.ends[0];
    if (idx == a.segments()) return a.ends[1];
    return a.via[idx - 1];
}

}  // namespace

ShadowDiagram ShadowDiagram::build(DiagramData data) {
    std::sort(data.bridge_points.begin(), data.bridge_points.end());
    std::sort(data.crossings.begin(), data.crossings.end());
    std::sort(data.arcs.begin(), data.arcs.end(),
              [](const Arc& a, const Arc& b) { return a.id < b.id; });
    ShadowDiagram d;
    d.data_ = std::move(data);
    d.index();

    const auto& D = d.data_;
    auto fail = [](const std::string& m) -> void { throw Error(Err::InvalidDiagram, m); };
    if (D.bridge_points.empty()) fail("no bridge points");
    for (int v : D.bridge_points)
        if (d.x_.count(v)) fail("vertex " + std::to_string(v) + " is both kinds");
    if (d.bp_.size() != D.bridge_points.size() || d.x_.size() != D.crossings.size())
        fail("duplicate vertex id");
    if (D.bridge_points.size() % 2 != 0) fail("odd number of bridge points");

    std::set<int> arc_ids;
    for (const Arc& a : D.arcs) {
        if (!arc_ids.insert(a.id).second) fail("duplicate arc id " + std::to_string(a.id));
        for (int e : a.ends)
            if (!d.bp_.count(e)) fail("arc " + std::to_string(a.id) + " end is not a bridge point");
        std::set<int> seen;
        for (int x : a.via) {
            if (!d.x_.count(x)) fail("arc " + std::to_string(a.id) + " via a non-crossing");
            if (!seen.insert(x).second)
                fail("arc " + std::to_string(a.id) + " passes a crossing twice");
        }
    }

    // Rotation keys must cover exactly the vertices; each dart exactly once.
    std::set<int> keys;
    for (const auto& [v, _] : D.rotation) keys.insert(v);
    if (keys.size() != d.bp_.size() + d.x_.size()) fail("rotation key count");
    for (int v : D.bridge_points)
        if (!keys.count(v)) fail("missing rotation at " + std::to_string(v));
    for (int v : D.crossings)
        if (!keys.count(v)) fail("missing rotation at " + std::to_string(v));

    std::set<Dart> all;
    long total = 0;
    for (const auto& [v, list] : D.rotation) {
        for (const Dart& dd : list) {
            if (!d.aidx_.count(dd.arc)) fail("rotation dart on unknown arc");
            const Arc& a = d.arc(dd.arc);
            if (dd.seg < 0 || dd.seg >= a.segments() || (dd.end != 0 && dd.end != 1))
                fail("rotation dart out of range " + to_string(dd));
            if (d.vertex_of(dd) != v)
                fail("dart " + to_string(dd) + " listed at wrong vertex " + std::to_string(v));
            if (!all.insert(dd).second) fail("dart repeated " + to_string(dd));
        }
        total += static_cast<long>(list.size());
    }
    long expect = 0;
    for (const Arc& a : D.arcs) expect += 2L * a.segments();
    if (total != expect) fail("rotation covers wrong dart count");

    for (int v : D.bridge_points) {
        const auto& list = D.rotation.at(v);
        if (list.size() != 3) fail("bridge point valence != 3");
        std::set<int> colors;
        for (const Dart& dd : list) colors.insert(static_cast<int>(d.arc(dd.arc).color));
        if (colors.size() != 3) fail("bridge point misses a color");
        for (const Dart& dd : list) {
            const Arc& a = d.arc(dd.arc);
            bool at_end = (dd.seg == 0 && dd.end == 0 && a.ends[0] == v) ||
                          (dd.seg == a.segments() - 1 && dd.end == 1 && a.ends[1] == v);
            if (!at_end) fail("non-terminal dart at bridge point");
        }
    }
    for (int v : D.crossings) {
        const auto& list = D.rotation.at(v);
        if (list.size() != 4) fail("crossing valence != 4");
        if (list[0].arc != list[2].arc || list[1].arc != list[3].arc ||
            list[0].arc == list[1].arc)
            fail("crossing does not interleave two arcs");
    }
    if (d.euler_characteristic() != 2)
        fail("map is not a sphere: chi = " + std::to_string(d.euler_characteristic()));
    return d;
}

void ShadowDiagram::index() {
    bp_.clear();
    x_.clear();
    aidx_.clear();
    end_arc_.clear();
    faces_.clear();
    face_idx_.clear();
    for (int v : data_.bridge_points) bp_.insert(v);
    for (int v : data_.crossings) x_.insert(v);
    for (size_t i = 0; i < data_.arcs.size(); ++i) {
        const Arc& a = data_.arcs[i];
        aidx_[a.id] = static_cast<int>(i);
        end_arc_[{a.ends[0], static_cast<int>(a.color)}] = a.id;
        end_arc_[{a.ends[1], static_cast<int>(a.color)}] = a.id;
    }
}

ShadowDiagram ShadowDiagram::theta() {
    DiagramData d;
    d.bridge_points = {0, 1};
    d.arcs = {{0, Color::R, {0, 1}, {}}, {1, Color::B, {0, 1}, {}}, {2, Color::G, {0, 1}, {}}};
    d.rotation[0] = {{1, 0, 0}, {0, 0, 0}, {2, 0, 0}};
    d.rotation[1] = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};
    return build(std::move(d));
}

const Arc& ShadowDiagram::arc(int id) const {
    auto it = aidx_.find(id);
    if (it == aidx_.end()) throw Error(Err::PreconditionViolated, "no arc " + std::to_string(id));
    return data_.arcs[it->second];
}

bool ShadowDiagram::has_arc(int id) const { return aidx_.count(id) != 0; }

int ShadowDiagram::arc_at(int v, Color c) const {
    auto it = end_arc_.find({v, static_cast<int>(c)});
    if (it == end_arc_.end())
        throw Error(Err::PreconditionViolated,
                    "no " + std::string(to_string(c)) + " end at vertex " + std::to_string(v));
    return it->second;
}

int ShadowDiagram::vertex_of(const Dart& d) const {
    const Arc& a = arc(d.arc);
    return node_of(a, d.seg + d.end);
}

Dart ShadowDiagram::alpha(const Dart& d) const { return {d.arc, d.seg, 1 - d.end}; }

Dart ShadowDiagram::sigma(const Dart& d) const {
    const auto& list = data_.rotation.at(vertex_of(d));
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == d) return list[(i + 1) % list.size()];
    throw Error(Err::InvalidDiagram, "dart missing from rotation: " + to_string(d));
}

const std::vector<std::vector<Dart>>& ShadowDiagram::faces() const {
    if (!faces_.empty() || data_.arcs.empty()) return faces_;
    std::set<Dart> todo;
    for (const Arc& a : data_.arcs)
        for (int s = 0; s < a.segments(); ++s) {
            todo.insert({a.id, s, 0});
            todo.insert({a.id, s, 1});
        }
    while (!todo.empty()) {
        Dart start = *todo.begin();
        std::vector<Dart> orbit;
        Dart d = start;
        do {
            orbit.push_back(d);
            todo.erase(d);
            d = phi(d);
        } while (!(d == start));
        faces_.push_back(std::move(orbit));
    }
    for (size_t i = 0; i < faces_.size(); ++i)
        for (const Dart& d : faces_[i]) face_idx_[d] = static_cast<int>(i);
    return faces_;
}

int ShadowDiagram::face_of(const Dart& d) const {
    faces();
    auto it = face_idx_.find(d);
    if (it == face_idx_.end()) throw Error(Err::InvalidDiagram, "no face for " + to_string(d));
    return it->second;
}

int ShadowDiagram::edge_count() const {
    int e = 0;
    for (const Arc& a : data_.arcs) e += a.segments();
    return e;
}

int ShadowDiagram::euler_characteristic() const {
    int v = static_cast<int>(data_.bridge_points.size() + data_.crossings.size());
    return v - edge_count() + static_cast<int>(faces().size());
}

TaitGraph ShadowDiagram::skeleton() const {
    std::vector<Edge> edges;
    for (const Arc& a : data_.arcs) edges.push_back({a.id, a.ends[0], a.ends[1], a.color});
    try {
        return TaitGraph::validate(std::move(edges));
    } catch (const Error& e) {
        if (e.kind() == Err::NotConnected)
            throw Error(Err::DisconnectedSkeleton, "matchings do not connect the bridge points");
        throw;
    }
}

std::vector<std::vector<int>> ShadowDiagram::pairing_curves(ColorPair pair) const {
    auto cs = colors_of(pair);
    std::set<int> todo(bp_.begin(), bp_.end());
    std::vector<std::vector<int>> out;
    while (!todo.empty()) {
        int start = *todo.begin();
        std::vector<int> curve;
        int v = start;
        int turn = 0;
        do {
            curve.push_back(v);
            todo.erase(v);
            const Arc& a = arc(arc_at(v, cs[turn % 2]));
            v = a.ends[0] == v ? a.ends[1] : a.ends[0];
            ++turn;
        } while (v != start);
        out.push_back(std::move(curve));
    }
    return out;
}

int ShadowDiagram::curve_of(int bp, ColorPair pair) const {
    auto curves = pairing_curves(pair);
    for (size_t i = 0; i < curves.size(); ++i)
        for (int v : curves[i])
            if (v == bp) return static_cast<int>(i);
    throw Error(Err::PreconditionViolated, "no bridge point " + std::to_string(bp));
}

bool ShadowDiagram::curve_embedded(int curve, ColorPair pair) const {
    for (int x : data_.crossings) {
        const auto& list = data_.rotation.at(x);
        const Arc& a0 = arc(list[0].arc);
        const Arc& a1 = arc(list[1].arc);
        if (!contains(pair, a0.color) || !contains(pair, a1.color)) continue;
        if (curve_of(a0.ends[0], pair) == curve || curve_of(a1.ends[0], pair) == curve)
            return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PairingReport ShadowDiagram::pairing_report(ColorPair pair) const {
    PairingReport r;
    r.pair = pair;
    auto curves = pairing_curves(pair);
    r.closed_curves = static_cast<int>(curves.size());
    r.embedded = true;
    for (int x : data_.crossings) {
        const auto& list = data_.rotation.at(x);
        Color c0 = arc(list[0].arc).color;
        Color c1 = arc(list[1].arc).color;
        if (contains(pair, c0) && contains(pair, c1)) r.embedded = false;
    }
    if (!r.embedded) {
        r.standard = false;
        return r;
    }
    // Erase the third color from the sphere: full-map faces merge across every
    // third-color segment. The classes are the complementary regions of the
    // pair's curves; standard means one region touches every curve.
    faces();
    UnionFind uf(faces_.size());
    Color c = third(pair);
    for (const Arc& a : data_.arcs) {
        if (a.color != c) continue;
        for (int s = 0; s < a.segments(); ++s)
            uf.unite(face_of({a.id, s, 0}), face_of({a.id, s, 1}));
    }
    std::map<int, int> curve_idx;  // bp -> curve
    for (size_t i = 0; i < curves.size(); ++i)
        for (int v : curves[i]) curve_idx[v] = static_cast<int>(i);
    std::map<int, std::set<int>> adj;  // region class -> curves touched
    for (const Arc& a : data_.arcs) {
        if (!contains(pair, a.color)) continue;
        int curve = curve_idx.at(a.ends[0]);
        for (int s = 0; s < a.segments(); ++s) {
            adj[uf.find(face_of({a.id, s, 0}))].insert(curve);
            adj[uf.find(face_of({a.id, s, 1}))].insert(curve);
        }
    }
    r.standard = false;
    for (const auto& [cls, touched] : adj)
        if (static_cast<int>(touched.size()) == r.closed_curves) r.standard = true;
    return r;
}

ShadowDiagram ShadowDiagram::mirrored() const {
    DiagramData d = data_;
    for (auto& [v, list] : d.rotation) std::reverse(list.begin(), list.end());
    return build(std::move(d));
}

std::optional<std::map<Dart, Dart>> map_isomorphic(const ShadowDiagram& a, const ShadowDiagram& b) {
    if (a.bridge_points().size() != b.bridge_points().size() ||
        a.crossings().size() != b.crossings().size() || a.arcs().size() != b.arcs().size() ||
        a.edge_count() != b.edge_count())
        return std::nullopt;
    if (a.arcs().empty()) return std::map<Dart, Dart>{};
    std::vector<Dart> darts_a, darts_b;
    for (const Arc& arc : a.arcs())
        for (int s = 0; s < arc.segments(); ++s) {
            darts_a.push_back({arc.id, s, 0});
            darts_a.push_back({arc.id, s, 1});
        }
    for (const Arc& arc : b.arcs())
        for (int s = 0; s < arc.segments(); ++s) {
            darts_b.push_back({arc.id, s, 0});
            darts_b.push_back({arc.id, s, 1});
        }
    Dart seed = darts_a.front();
    for (const Dart& cand : darts_b) {
        if (a.arc(seed.arc).color != b.arc(cand.arc).color) continue;
        if (a.is_bridge_point(a.vertex_of(seed)) != b.is_bridge_point(b.vertex_of(cand))) continue;
        std::map<Dart, Dart> f{{seed, cand}};
        std::vector<Dart> queue{seed};
        bool ok = true;
        while (ok && !queue.empty()) {
            Dart d = queue.back();
            queue.pop_back();
            Dart fd = f.at(d);
            if (a.arc(d.arc).color != b.arc(fd.arc).color ||
                a.is_bridge_point(a.vertex_of(d)) != b.is_bridge_point(b.vertex_of(fd))) {
                ok = false;
                break;
            }
            std::array<std::pair<Dart, Dart>, 2> steps{
                std::make_pair(a.alpha(d), b.alpha(fd)),
                std::make_pair(a.sigma(d), b.sigma(fd)),
            };
            for (auto& [nd, nfd] : steps) {
                auto it = f.find(nd);
                if (it == f.end()) {
                    f[nd] = nfd;
                    queue.push_back(nd);
                } else if (!(it->second == nfd)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        if (f.size() != darts_a.size()) continue;  // not connected onto all darts
        std::set<Dart> image;
        for (const auto& [k, v] : f) image.insert(v);
        if (image.size() != darts_b.size()) continue;
        return f;
    }
    return std::nullopt;
}

}  // namespace trisect
