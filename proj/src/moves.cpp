#include "trisect/moves.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace trisect {

namespace {

int max_vertex(const DiagramData& d) {
    int m = -1;
    for (int v : d.bridge_points) m = std::max(m, v);
    for (int v : d.crossings) m = std::max(m, v);
    return m;
}

int max_arc_id(const DiagramData& d) {
    int m = -1;
    for (const Arc& a : d.arcs) m = std::max(m, a.id);
    return m;
}

Arc& arc_ref(DiagramData& d, int id) {
    for (Arc& a : d.arcs)
        if (a.id == id) return a;
    throw Error(Err::InvalidDiagram, "no arc " + std::to_string(id));
}

void erase_value(std::vector<int>& v, int x) {
    v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

void erase_arc_entry(DiagramData& d, int id) {
    d.arcs.erase(std::remove_if(d.arcs.begin(), d.arcs.end(),
                                [&](const Arc& a) { return a.id == id; }),
                 d.arcs.end());
}

template <class F>
void remap(DiagramData& d, F f) {
    for (auto& [v, list] : d.rotation)
        for (Dart& x : list) x = f(x);
}

void check_dart(const ShadowDiagram& sd, const Dart& x) {
    if (!sd.has_arc(x.arc))
        throw Error(Err::PreconditionViolated, "no arc " + std::to_string(x.arc));
    const Arc& a = sd.arc(x.arc);
    if (x.seg < 0 || x.seg >= a.segments() || (x.end != 0 && x.end != 1))
        throw Error(Err::PreconditionViolated, "dart out of range: " + to_string(x));
}

// Reverses an arc's orientation: dart (a,s,e) becomes (a, m-1-s, 1-e).
void reverse_arc(DiagramData& d, int id) {
    Arc& a = arc_ref(d, id);
    std::swap(a.ends[0], a.ends[1]);
    std::reverse(a.via.begin(), a.via.end());
    int m = a.segments();
    remap(d, [&](Dart x) { return x.arc == id ? Dart{id, m - 1 - x.seg, 1 - x.end} : x; });
}

// Inserts crossing X at via position p. The old segment p splits in two;
// darts at or beyond it shift up.
void insert_via(DiagramData& d, int arc_id, int p, int X) {
    Arc& a = arc_ref(d, arc_id);
    a.via.insert(a.via.begin() + p, X);
    remap(d, [&](Dart x) {
        if (x.arc != arc_id || x.seg < p || (x.seg == p && x.end == 0)) return x;
        if (x.seg == p) return Dart{arc_id, p + 1, 1};
        return Dart{arc_id, x.seg + 1, x.end};
    });
}

// Removes the adjacent via entries p and p+1; segments p..p+2 fuse into one.
void remove_via2(DiagramData& d, int arc_id, int p) {
    Arc& a = arc_ref(d, arc_id);
    a.via.erase(a.via.begin() + p, a.via.begin() + p + 2);
    remap(d, [&](Dart x) {
        if (x.arc != arc_id || x.seg < p || (x.seg == p && x.end == 0)) return x;
        if (x.seg == p + 2 && x.end == 1) return Dart{arc_id, p, 1};
        if (x.seg > p + 2) return Dart{arc_id, x.seg - 2, x.end};
        throw Error(Err::InvalidDiagram, "stale dart survived a bigon removal");
    });
}

// Severs segment `seg`. The lower piece keeps the id and gets bp_low as its
// new upper end; the upper piece becomes fresh_id starting at bp_high.
// Returns the darts based at the two new endpoints.
std::pair<Dart, Dart> cut_at_segment(DiagramData& d, int arc_id, int seg, int fresh_id,
                                     int bp_low, int bp_high) {
    Arc a = arc_ref(d, arc_id);
    Arc low{arc_id, a.color, {a.ends[0], bp_low},
            std::vector<int>(a.via.begin(), a.via.begin() + seg)};
    Arc high{fresh_id, a.color, {bp_high, a.ends[1]},
             std::vector<int>(a.via.begin() + seg, a.via.end())};
    arc_ref(d, arc_id) = low;
    d.arcs.push_back(high);
    remap(d, [&](Dart x) {
        if (x.arc != arc_id || x.seg < seg || (x.seg == seg && x.end == 0)) return x;
        if (x.seg == seg) return Dart{fresh_id, 0, 1};
        return Dart{fresh_id, x.seg - seg, x.end};
    });
    return {Dart{arc_id, seg, 1}, Dart{fresh_id, 0, 0}};
}

// Severs the arc at crossing X (which it passes through). Piece before X
// keeps the id and ends at bp_low; the rest becomes fresh_id from bp_high.
std::pair<Dart, Dart> cut_at_crossing(DiagramData& d, int arc_id, int X, int fresh_id,
                                      int bp_low, int bp_high) {
    Arc a = arc_ref(d, arc_id);
    auto it = std::find(a.via.begin(), a.via.end(), X);
    if (it == a.via.end()) throw Error(Err::InvalidDiagram, "arc does not pass the crossing");
    int j = static_cast<int>(it - a.via.begin());
    Arc low{arc_id, a.color, {a.ends[0], bp_low},
            std::vector<int>(a.via.begin(), a.via.begin() + j)};
    Arc high{fresh_id, a.color, {bp_high, a.ends[1]},
             std::vector<int>(a.via.begin() + j + 1, a.via.end())};
    arc_ref(d, arc_id) = low;
    d.arcs.push_back(high);
    remap(d, [&](Dart x) {
        if (x.arc != arc_id || x.seg <= j) return x;
        if (x.seg == j + 1) return Dart{fresh_id, 0, x.end};
        return Dart{fresh_id, x.seg - j - 1, x.end};
    });
    return {Dart{arc_id, j, 1}, Dart{fresh_id, 0, 0}};
}

struct MergeOut {
    int id = -1;
    Dart toward_w1{};  // through-dart at the inserted crossing facing the w1-side piece
    Dart toward_w2{};
};

// Fuses arc a1 (ending at junction w1) with arc a2 (ending at w2) into one
// arc keeping the smaller id, oriented from the smaller-id piece outward.
// The rotation entries at w1 and w2 must already be gone. With `cross`, the
// new crossing is placed between the two pieces.
MergeOut merge_arcs(DiagramData& d, int a1, int w1, int a2, int w2, std::optional<int> cross) {
    if (a1 == a2) throw Error(Err::PreconditionViolated, "cannot merge an arc with itself");
    if (w1 == w2) throw Error(Err::PreconditionViolated, "merge junctions coincide");
    int f = std::min(a1, a2), g = std::max(a1, a2);
    int wf = (f == a1) ? w1 : w2;
    int wg = (f == a1) ? w2 : w1;
    if (arc_ref(d, f).ends[1] != wf) {
        if (arc_ref(d, f).ends[0] != wf)
            throw Error(Err::PreconditionViolated, "arc does not reach the junction");
        reverse_arc(d, f);
    }
    if (arc_ref(d, g).ends[0] != wg) {
        if (arc_ref(d, g).ends[1] != wg)
            throw Error(Err::PreconditionViolated, "arc does not reach the junction");
        reverse_arc(d, g);
    }
    Arc fa = arc_ref(d, f);
    Arc ga = arc_ref(d, g);
    int s1 = fa.segments();
    int off = cross ? s1 : s1 - 1;  // merged index of ga's segment 0
    std::vector<int> via = fa.via;
    if (cross) via.push_back(*cross);
    via.insert(via.end(), ga.via.begin(), ga.via.end());
    arc_ref(d, f) = Arc{f, fa.color, {fa.ends[0], ga.ends[1]}, via};
    erase_arc_entry(d, g);
    remap(d, [&](Dart x) {
        if (x.arc != g) return x;
        if (x.seg == 0) {
            if (x.end == 0) throw Error(Err::InvalidDiagram, "stale dart at a merge junction");
            return Dart{f, off, 1};
        }
        return Dart{f, off + x.seg, x.end};
    });
    MergeOut out;
    out.id = f;
    if (cross) {
        Dart to_f{f, s1 - 1, 1};
        Dart to_g{f, s1, 0};
        out.toward_w1 = (wf == w1) ? to_f : to_g;
        out.toward_w2 = (wf == w1) ? to_g : to_f;
    }
    return out;
}

// Shared preconditions of the three pair reconnections, including the face
// chain the connector route must follow.
void check_pair_move(const ShadowDiagram& sd, ColorPair pair, Dart da, Dart db,
                     const std::vector<Dart>& path, bool want_same_curve, Err curve_err,
                     Err face_err) {
    check_dart(sd, da);
    check_dart(sd, db);
    Color ca = sd.arc(da.arc).color;
    Color cb = sd.arc(db.arc).color;
    if (ca == cb || !contains(pair, ca) || !contains(pair, cb))
        throw Error(Err::PreconditionViolated, "darts must lie on arcs of the pair's two colors");
    int c1 = sd.curve_of(sd.arc(da.arc).ends[0], pair);
    int c2 = sd.curve_of(sd.arc(db.arc).ends[0], pair);
    if (want_same_curve && c1 != c2)
        throw Error(curve_err, "arcs lie on different pairing curves");
    if (!want_same_curve && c1 == c2)
        throw Error(curve_err, "arcs lie on the same pairing curve");
    // The reconnection lives inside a disk bounded by the chosen curve(s), so
    // only those curves must be embedded; other curves of the pairing may
    // still carry crossings.
    if (!sd.curve_embedded(c1, pair) || !sd.curve_embedded(c2, pair))
        throw Error(Err::PairNotStandard,
                    std::string(to_string(pair)) + " reconnection curve is crossed");
    int f = sd.face_of(da);
    for (const Dart& s : path) {
        check_dart(sd, s);
        if (sd.arc(s.arc).color != third(pair))
            throw Error(Err::NoRoute, "connector may only cross arcs of the third color");
        if (sd.face_of(s) != f)
            throw Error(Err::NoRoute, "connector route leaves its current face");
        f = sd.face_of(sd.alpha(s));
    }
    if (f != sd.face_of(db))
        throw Error(face_err, path.empty() ? "darts do not border a common face"
                                           : "connector route misses the target face");
}

// Drags the two reconnection strands of the cut b-arc through the third-color
// segments in `path` (pre-move coordinates). The strands run side by side
// along the route from the b cut site back to the a cut site where the new
// bridge points live, so every crossed segment gains two adjacent crossings,
// one per strand: the low piece appends them walking the route backwards, the
// high piece prepends them in route order. Fresh crossings start at next_v;
// returns the junction darts (near piece, far piece).
std::pair<Dart, Dart> extend_b_pieces(DiagramData& d, Dart db, int high_id,
                                      const std::vector<Dart>& path, int next_v) {
    int m = static_cast<int>(path.size());
    int low_id = db.arc;
    bool near_is_low = db.end == 0;
    int n0 = static_cast<int>(arc_ref(d, low_id).via.size());
    std::map<int, std::vector<int>> placed;  // crossed arc -> original segs used
    for (int t = 0; t < m; ++t) {
        int kr = m - 1 - t;  // the low piece meets the route's far end first
        const Dart& s = path[kr];
        int c_near = next_v + 2 * kr, c_far = next_v + 2 * kr + 1;
        d.crossings.push_back(c_near);
        d.crossings.push_back(c_far);
        insert_via(d, low_id, n0 + t, near_is_low ? c_near : c_far);
        Dart low_pb{low_id, n0 + t, 1}, low_pa{low_id, n0 + t + 1, 0};
        insert_via(d, high_id, 0, near_is_low ? c_far : c_near);
        Dart high_pa{high_id, 0, 1}, high_pb{high_id, 1, 0};
        int p = s.seg;  // original index, shifted by this move's earlier insertions
        for (int q : placed[s.arc])
            if (q <= s.seg) p += 2;
        placed[s.arc].push_back(s.seg);
        // The crossed-from face lies right of s; the lane order along the
        // route puts the near strand on the left of the a-to-b direction,
        // which fixes which strand crosses lower on the segment.
        insert_via(d, s.arc, p, s.end == 0 ? c_near : c_far);
        insert_via(d, s.arc, p + 1, s.end == 0 ? c_far : c_near);
        Dart near_pa = near_is_low ? low_pa : high_pa;
        Dart near_pb = near_is_low ? low_pb : high_pb;
        Dart far_pa = near_is_low ? high_pa : low_pa;
        Dart far_pb = near_is_low ? high_pb : low_pb;
        auto rot = [&](int c, int pos, Dart to_pa, Dart to_pb) {
            Dart l_low{s.arc, pos, 1}, l_up{s.arc, pos + 1, 0};
            if (s.end == 0)
                d.rotation[c] = {l_up, to_pb, l_low, to_pa};
            else
                d.rotation[c] = {l_up, to_pa, l_low, to_pb};
        };
        if (s.end == 0) {
            rot(c_near, p, near_pa, near_pb);
            rot(c_far, p + 1, far_pa, far_pb);
        } else {
            rot(c_far, p, far_pa, far_pb);
            rot(c_near, p + 1, near_pa, near_pb);
        }
    }
    Dart low_end{low_id, n0 + m, 1};
    Dart high_end{high_id, 0, 0};
    if (near_is_low) return {low_end, high_end};
    return {high_end, low_end};
}

// The uncrossed reconnection shared by perturb and tube: cut both arcs, add
// bridge points vx (near da / far db) and vy (far da / near db), and join
// them with a third-color connector along the route.
MoveResult h_core(const ShadowDiagram& sd, ColorPair pair, Dart da, Dart db,
                  const std::vector<Dart>& path) {
    DiagramData d = sd.data();
    int vx = max_vertex(d) + 1, vy = max_vertex(d) + 2;
    int fresh_a = max_arc_id(d) + 1, fresh_b = max_arc_id(d) + 2, dp = max_arc_id(d) + 3;
    auto [low_a, high_a] = cut_at_segment(d, da.arc, da.seg, fresh_a, da.end == 0 ? vx : vy,
                                          da.end == 0 ? vy : vx);
    Dart near_a = da.end == 0 ? low_a : high_a;
    Dart far_a = da.end == 0 ? high_a : low_a;
    cut_at_segment(d, db.arc, db.seg, fresh_b, db.end == 0 ? vy : vx, db.end == 0 ? vx : vy);
    auto [near_b, far_b] = extend_b_pieces(d, db, fresh_b, path, vy + 1);
    d.bridge_points.push_back(vx);
    d.bridge_points.push_back(vy);
    d.arcs.push_back(Arc{dp, third(pair), {vx, vy}, {}});
    d.rotation[vx] = {Dart{dp, 0, 0}, near_a, far_b};
    d.rotation[vy] = {far_a, Dart{dp, 0, 1}, near_b};
    MoveResult r{ShadowDiagram::build(std::move(d))};
    r.bp_x = vx;
    r.bp_y = vy;
    r.new_arc = dp;
    return r;
}

// Crossed reconnection, positive chirality: near ends meet at the + bridge
// point, far ends at the -, and the far-da strand crosses the near-db strand
// once right next to the new bridge points.
MoveResult crosscap_plus(const ShadowDiagram& sd, ColorPair pair, Dart da, Dart db,
                         const std::vector<Dart>& path) {
    DiagramData d = sd.data();
    int xp = max_vertex(d) + 1, xm = max_vertex(d) + 2, cx = max_vertex(d) + 3;
    int fresh_a = max_arc_id(d) + 1, fresh_b = max_arc_id(d) + 2, dp = max_arc_id(d) + 3;

    auto [low_a, high_a] = cut_at_segment(d, da.arc, da.seg, fresh_a, da.end == 0 ? xp : xm,
                                          da.end == 0 ? xm : xp);
    Dart near_a = da.end == 0 ? low_a : high_a;
    int far_a_id = da.end == 0 ? fresh_a : da.arc;
    int pa = da.end == 0 ? 0 : static_cast<int>(arc_ref(d, far_a_id).via.size());
    insert_via(d, far_a_id, pa, cx);
    Dart a_to_minus = da.end == 0 ? Dart{far_a_id, 0, 1} : Dart{far_a_id, pa + 1, 0};
    Dart a_origin = da.end == 0 ? Dart{far_a_id, 1, 0} : Dart{far_a_id, pa, 1};
    Dart far_a = da.end == 0 ? high_a : Dart{far_a_id, pa + 1, 1};

    cut_at_segment(d, db.arc, db.seg, fresh_b, db.end == 0 ? xp : xm, db.end == 0 ? xm : xp);
    Dart far_b = extend_b_pieces(d, db, fresh_b, path, cx + 1).second;
    int near_b_id = db.end == 0 ? db.arc : fresh_b;
    int pb = db.end == 0 ? static_cast<int>(arc_ref(d, near_b_id).via.size()) : 0;
    insert_via(d, near_b_id, pb, cx);
    Dart b_to_plus = db.end == 0 ? Dart{near_b_id, pb + 1, 0} : Dart{near_b_id, 0, 1};
    Dart b_origin = db.end == 0 ? Dart{near_b_id, pb, 1} : Dart{near_b_id, 1, 0};
    Dart near_b = db.end == 0 ? Dart{near_b_id, pb + 1, 1} : Dart{near_b_id, 0, 0};

    d.bridge_points.push_back(xp);
    d.bridge_points.push_back(xm);
    d.crossings.push_back(cx);
    d.arcs.push_back(Arc{dp, third(pair), {xp, xm}, {}});
    d.rotation[xp] = {near_a, Dart{dp, 0, 0}, near_b};
    d.rotation[xm] = {far_a, Dart{dp, 0, 1}, far_b};
    d.rotation[cx] = {a_origin, b_to_plus, a_to_minus, b_origin};
    MoveResult r{ShadowDiagram::build(std::move(d))};
    r.bp_x = xp;
    r.bp_y = xm;
    r.new_arc = dp;
    r.new_crossing = cx;
    return r;
}

ShadowDiagram r2_reduce(ShadowDiagram cur) {
    for (;;) {
        bool removed = false;
        for (const auto& face : cur.faces()) {
            if (face.size() != 2) continue;
            Dart d1 = face[0], d2 = face[1];
            int x = cur.vertex_of(d1), y = cur.vertex_of(d2);
            if (!cur.is_crossing(x) || !cur.is_crossing(y) || x == y) continue;
            if (d1.arc == d2.arc) continue;
            DiagramData nd = cur.data();
            nd.rotation.erase(x);
            nd.rotation.erase(y);
            erase_value(nd.crossings, x);
            erase_value(nd.crossings, y);
            remove_via2(nd, d1.arc, d1.seg - 1);
            remove_via2(nd, d2.arc, d2.seg - 1);
            cur = ShadowDiagram::build(std::move(nd));
            removed = true;
            break;
        }
        if (!removed) break;
    }
    return cur;
}

std::pair<Color, Color> color_cycle(const ShadowDiagram& sd, int v) {
    const auto& list = sd.rotation().at(v);
    int t = -1;
    for (int i = 0; i < 3; ++i)
        if (sd.arc(list[i].arc).color == Color::R) t = i;
    return {sd.arc(list[(t + 1) % 3].arc).color, sd.arc(list[(t + 2) % 3].arc).color};
}

}  // namespace

MoveResult perturb(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db,
                   const std::vector<Dart>& path) {
    check_pair_move(d, pair, da, db, path, true, Err::ArcsNotOnSameCurve, Err::NotAFace);
    return h_core(d, pair, da, db, path);
}

MoveResult tube(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db,
                const std::vector<Dart>& path) {
    check_pair_move(d, pair, da, db, path, false, Err::SameComponent, Err::NoRoute);
    return h_core(d, pair, da, db, path);
}

MoveResult crosscap_sum(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db, int sign,
                        const std::vector<Dart>& path) {
    if (sign != 1 && sign != -1)
        throw Error(Err::PreconditionViolated, "crosscap sign must be +1 or -1");
    check_pair_move(d, pair, da, db, path, true, Err::ArcsNotOnSameCurve, Err::NotAFace);
    if (sign == 1) return crosscap_plus(d, pair, da, db, path);
    // The mirror conjugate: flipping every dart compensates the reversal of
    // every rotation, so the checked preconditions coincide with the above.
    Dart ma{da.arc, da.seg, 1 - da.end};
    Dart mb{db.arc, db.seg, 1 - db.end};
    std::vector<Dart> mpath;
    for (const Dart& s : path) mpath.push_back({s.arc, s.seg, 1 - s.end});
    MoveResult r = crosscap_plus(d.mirrored(), pair, ma, mb, mpath);
    r.diagram = r.diagram.mirrored();
    return r;
}

MoveResult deperturb(const ShadowDiagram& sd, int connector_arc) {
    if (!sd.has_arc(connector_arc))
        throw Error(Err::PreconditionViolated, "no arc " + std::to_string(connector_arc));
    const Arc conn = sd.arc(connector_arc);
    ColorPair pair = ColorPair::RB;
    for (ColorPair p : all_pairs)
        if (third(p) == conn.color) pair = p;
    if (!conn.via.empty())
        throw Error(Err::PreconditionViolated, "connector passes through crossings");
    int w1 = conn.ends[0], w2 = conn.ends[1];
    // Merging crosses between two pairing curves; they need not be embedded —
    // the junction disks are local to the endpoints, so crossings elsewhere
    // on the end curves (even freshly created ones) do not obstruct.
    if (sd.curve_of(w1, pair) == sd.curve_of(w2, pair))
        throw Error(Err::ArcsOnSameCurve, "connector endpoints lie on one pairing curve");

    auto normalized = [&](int w, Dart from) {
        const auto& list = sd.rotation().at(w);
        int t = -1;
        for (int i = 0; i < 3; ++i)
            if (list[i] == from) t = i;
        return std::pair<Dart, Dart>{list[(t + 1) % 3], list[(t + 2) % 3]};
    };
    auto [p1, q1] = normalized(w1, Dart{connector_arc, 0, 0});
    auto [p2, q2] = normalized(w2, Dart{connector_arc, 0, 1});
    Color cp1 = sd.arc(p1.arc).color;
    Color cp2 = sd.arc(p2.arc).color;

    DiagramData d = sd.data();
    int cx = max_vertex(d) + 1;
    d.rotation.erase(w1);
    d.rotation.erase(w2);
    erase_value(d.bridge_points, w1);
    erase_value(d.bridge_points, w2);
    erase_arc_entry(d, connector_arc);

    if (cp1 != cp2) {
        // Mirror-image end rotations: the like-colored strands reattach on
        // disjoint sides, no crossing (the exact inverse of the uncrossed
        // reconnection).
        merge_arcs(d, p1.arc, w1, q2.arc, w2, std::nullopt);
        merge_arcs(d, q1.arc, w1, p2.arc, w2, std::nullopt);
        return MoveResult{ShadowDiagram::build(std::move(d))};
    }
    // Equal end rotations: the reattached strands must cross once.
    MergeOut mp = merge_arcs(d, p1.arc, w1, p2.arc, w2, cx);
    MergeOut mq = merge_arcs(d, q1.arc, w1, q2.arc, w2, cx);
    d.crossings.push_back(cx);
    d.rotation[cx] = {mq.toward_w2, mp.toward_w1, mq.toward_w1, mp.toward_w2};
    MoveResult r{ShadowDiagram::build(std::move(d))};
    r.new_crossing = cx;
    return r;
}

MoveResult split_crossing(const ShadowDiagram& sd, int crossing, int diagonal) {
    if (!sd.is_crossing(crossing))
        throw Error(Err::PreconditionViolated, "not a crossing: " + std::to_string(crossing));
    if (diagonal != 0 && diagonal != 1)
        throw Error(Err::PreconditionViolated, "diagonal must be 0 or 1");
    DiagramData d = sd.data();
    std::vector<Dart> f = d.rotation.at(crossing);
    Color ca = sd.arc(f[0].arc).color;
    Color cb = sd.arc(f[1].arc).color;
    if (ca == cb)
        throw Error(Err::ColorMismatch, "crossing arcs share a color; no third color to add");
    Color cc = Color::R;
    for (Color c : all_colors)
        if (c != ca && c != cb) cc = c;
    int x1 = max_vertex(d) + 1, x2 = max_vertex(d) + 2;
    int fresh_a = max_arc_id(d) + 1, fresh_b = max_arc_id(d) + 2, dp = max_arc_id(d) + 3;
    // Darts at positions diagonal+1, diagonal+2 cap off at x1; the other two at x2.
    auto bp_of = [&](const Dart& x) {
        for (int i = 0; i < 4; ++i)
            if (f[i] == x) {
                int rel = (i - diagonal + 4) % 4;
                return (rel == 1 || rel == 2) ? x1 : x2;
            }
        throw Error(Err::InvalidDiagram, "dart missing at the crossing");
    };
    for (int arc_id : {f[0].arc, f[1].arc}) {
        const Arc& a = arc_ref(d, arc_id);
        auto it = std::find(a.via.begin(), a.via.end(), crossing);
        int j = static_cast<int>(it - a.via.begin());
        int fresh = (arc_id == f[0].arc) ? fresh_a : fresh_b;
        cut_at_crossing(d, arc_id, crossing, fresh, bp_of(Dart{arc_id, j, 1}),
                        bp_of(Dart{arc_id, j + 1, 0}));
    }
    std::vector<Dart> g = d.rotation.at(crossing);  // the four darts, remapped by the cuts
    d.rotation.erase(crossing);
    erase_value(d.crossings, crossing);
    d.bridge_points.push_back(x1);
    d.bridge_points.push_back(x2);
    d.arcs.push_back({dp, cc, {x1, x2}, {}});
    d.rotation[x1] = {Dart{dp, 0, 0}, g[(diagonal + 1) % 4], g[(diagonal + 2) % 4]};
    d.rotation[x2] = {Dart{dp, 0, 1}, g[(diagonal + 3) % 4], g[diagonal]};
    MoveResult r{ShadowDiagram::build(std::move(d))};
    r.bp_x = x1;
    r.bp_y = x2;
    r.new_arc = dp;
    return r;
}

MoveResult connect_sum(const ShadowDiagram& d1, int x1, const ShadowDiagram& d2, int x2) {
    if (!d1.is_bridge_point(x1) || !d2.is_bridge_point(x2))
        throw Error(Err::PreconditionViolated, "connect sum junctions must be bridge points");
    if (color_cycle(d1, x1) == color_cycle(d2, x2))
        throw Error(Err::PreconditionViolated,
                    "junction rotations have equal color cycles; they must be opposite");
    DiagramData d = d1.data();
    int voff = max_vertex(d) + 1;
    int aoff = max_arc_id(d) + 1;
    for (int v : d2.bridge_points()) d.bridge_points.push_back(v + voff);
    for (int v : d2.crossings()) d.crossings.push_back(v + voff);
    for (const Arc& a : d2.arcs()) {
        Arc b{a.id + aoff, a.color, {a.ends[0] + voff, a.ends[1] + voff}, a.via};
        for (int& x : b.via) x += voff;
        d.arcs.push_back(b);
    }
    for (const auto& [v, list] : d2.rotation()) {
        std::vector<Dart> shifted = list;
        for (Dart& x : shifted) x.arc += aoff;
        d.rotation[v + voff] = shifted;
    }
    int j2 = x2 + voff;
    d.rotation.erase(x1);
    d.rotation.erase(j2);
    erase_value(d.bridge_points, x1);
    erase_value(d.bridge_points, j2);
    for (Color c : all_colors)
        merge_arcs(d, d1.arc_at(x1, c), x1, d2.arc_at(x2, c) + aoff, j2, std::nullopt);
    return MoveResult{ShadowDiagram::build(std::move(d))};
}

MoveResult slide(const ShadowDiagram& sd, Dart dart_a, Dart dart_over) {
    check_dart(sd, dart_a);
    check_dart(sd, dart_over);
    int arc_a = dart_a.arc, arc_l = dart_over.arc;
    if (sd.arc(arc_a).color != sd.arc(arc_l).color)
        throw Error(Err::ColorMismatch, "slide needs two arcs of one color");
    if (arc_a == arc_l)
        throw Error(Err::PreconditionViolated, "an arc cannot slide over itself");
    if (sd.face_of(dart_a) != sd.face_of(dart_over))
        throw Error(Err::NotAFace, "darts do not border a common face");
    const Arc la = sd.arc(arc_l);
    for (int x : la.via)
        for (const Dart& t : sd.rotation().at(x))
            if (t.arc == arc_a)
                throw Error(Err::PreconditionViolated,
                            "the sliding arc crosses the arc slid over");

    DiagramData d = sd.data();
    int m = static_cast<int>(la.via.size());
    int sl = dart_over.seg;
    bool fw = (dart_over.end == 0);  // the tour runs out in dart_over's direction
    int k_new = 2 * m + 4;
    int base = max_vertex(d) + 1;

    // Insert the detour block into the sliding arc first, so its dart
    // coordinates are final before any rotation entries reference them.
    std::vector<int> block(k_new);
    for (int j = 0; j < k_new; ++j) block[j] = base + j;
    if (dart_a.end == 1) std::reverse(block.begin(), block.end());
    int sa = dart_a.seg;
    {
        Arc& aa = arc_ref(d, arc_a);
        aa.via.insert(aa.via.begin() + sa, block.begin(), block.end());
    }
    remap(d, [&](Dart x) {
        if (x.arc != arc_a || x.seg < sa || (x.seg == sa && x.end == 0)) return x;
        if (x.seg == sa) return Dart{arc_a, sa + k_new, 1};
        return Dart{arc_a, x.seg + k_new, x.end};
    });
    for (int j = 0; j < k_new; ++j) d.crossings.push_back(base + j);

    auto via_index = [&](int j) { return dart_a.end == 0 ? sa + j : sa + (k_new - 1 - j); };
    auto a_trav = [&](int j) {
        int p = via_index(j);
        return dart_a.end == 0 ? Dart{arc_a, p + 1, 0} : Dart{arc_a, p, 1};
    };
    auto a_anti = [&](int j) {
        int p = via_index(j);
        return dart_a.end == 0 ? Dart{arc_a, p, 1} : Dart{arc_a, p + 1, 0};
    };

    // The detour tour: out along the shared-face side of the overslid arc,
    // around its far endpoint, back along its other side past every crossing,
    // around the near endpoint, and home along the first side.
    struct Ev {
        bool cap;
        int lvia = -1;   // side copies: index into la.via
        bool right = false;
        int w = -1;      // caps: the endpoint rounded
        int which = 0;   // caps: 0 = first arc crossed, 1 = second
    };
    std::vector<Ev> evs;
    auto side = [&](int i, bool right) { evs.push_back({false, i, right, -1, 0}); };
    auto cap = [&](int w) {
        evs.push_back({true, -1, false, w, 0});
        evs.push_back({true, -1, false, w, 1});
    };
    if (fw)
        for (int i = sl; i < m; ++i) side(i, true);
    else
        for (int i = sl - 1; i >= 0; --i) side(i, true);
    cap(fw ? la.ends[1] : la.ends[0]);
    if (fw)
        for (int i = m - 1; i >= 0; --i) side(i, false);
    else
        for (int i = 0; i < m; ++i) side(i, false);
    cap(fw ? la.ends[0] : la.ends[1]);
    if (fw)
        for (int i = 0; i < sl; ++i) side(i, true);
    else
        for (int i = m - 1; i >= sl; --i) side(i, true);

    for (int j = 0; j < k_new; ++j) {
        int id = base + j;
        const Ev& e = evs[j];
        if (!e.cap) {
            int xi = la.via[e.lvia];
            Dart lf = fw ? Dart{arc_l, e.lvia + 1, 0} : Dart{arc_l, e.lvia, 1};
            const std::vector<Dart> rl = d.rotation.at(xi);
            int t = -1;
            for (int i = 0; i < 4; ++i)
                if (rl[i] == lf) t = i;
            Dart chosen = e.right ? rl[(t + 3) % 4] : rl[(t + 1) % 4];
            int arc_m = chosen.arc;
            const auto& mv = arc_ref(d, arc_m).via;
            int q = static_cast<int>(std::find(mv.begin(), mv.end(), xi) - mv.begin());
            bool after = (chosen == Dart{arc_m, q + 1, 0});
            if (!after && !(chosen == Dart{arc_m, q, 1}))
                throw Error(Err::InvalidDiagram, "crossing dart inconsistent with its arc");
            int p = after ? q + 1 : q;
            insert_via(d, arc_m, p, id);
            Dart m_toward = after ? Dart{arc_m, p, 1} : Dart{arc_m, p + 1, 0};
            Dart m_away = after ? Dart{arc_m, p + 1, 0} : Dart{arc_m, p, 1};
            Dart af = e.right ? a_trav(j) : a_anti(j);
            Dart ab = e.right ? a_anti(j) : a_trav(j);
            if (e.right)
                d.rotation[id] = {af, m_toward, ab, m_away};
            else
                d.rotation[id] = {af, m_away, ab, m_toward};
        } else {
            Dart lw = (la.ends[0] == e.w) ? Dart{arc_l, 0, 0} : Dart{arc_l, m, 1};
            const std::vector<Dart> rw = d.rotation.at(e.w);
            int t = -1;
            for (int i = 0; i < 3; ++i)
                if (rw[i] == lw) t = i;
            Dart chosen = rw[(t + 1 + e.which) % 3];
            int arc_p = chosen.arc;
            bool at_front = (arc_ref(d, arc_p).ends[0] == e.w);
            int p = at_front ? 0 : static_cast<int>(arc_ref(d, arc_p).via.size());
            insert_via(d, arc_p, p, id);
            Dart p_toward = at_front ? Dart{arc_p, 0, 1} : Dart{arc_p, p + 1, 0};
            Dart p_away = at_front ? Dart{arc_p, 1, 0} : Dart{arc_p, p, 1};
            d.rotation[id] = {p_away, a_trav(j), p_toward, a_anti(j)};
        }
    }
    return MoveResult{r2_reduce(ShadowDiagram::build(std::move(d)))};
}

MoveResult apply_move(const ShadowDiagram& d, const Move& m) {
    switch (m.kind) {
        case MoveKind::Perturb:
            return perturb(d, m.pair, m.dart_a, m.dart_b, m.path);
        case MoveKind::Deperturb:
            return deperturb(d, m.arc);
        case MoveKind::Crosscap:
            return crosscap_sum(d, m.pair, m.dart_a, m.dart_b, m.sign, m.path);
        case MoveKind::Tube:
            return tube(d, m.pair, m.dart_a, m.dart_b, m.path);
        case MoveKind::ConnectSum:
            if (!m.other)
                throw Error(Err::PreconditionViolated, "connect sum needs a second diagram");
            return connect_sum(d, m.x1, *m.other, m.x2);
        case MoveKind::Slide:
            return slide(d, m.dart_a, m.dart_b);
        case MoveKind::Split:
            return split_crossing(d, m.crossing, m.diagonal);
    }
    throw Error(Err::PreconditionViolated, "unknown move kind");
}

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Perturb: return "perturb";
        case MoveKind::Deperturb: return "deperturb";
        case MoveKind::Crosscap: return "crosscap";
        case MoveKind::Tube: return "tube";
        case MoveKind::ConnectSum: return "connect_sum";
        case MoveKind::Slide: return "slide";
        case MoveKind::Split: return "split";
    }
    return "?";
}

Move Move::perturb(ColorPair p, Dart a, Dart b, std::vector<Dart> path) {
    Move m;
    m.kind = MoveKind::Perturb;
    m.pair = p;
    m.dart_a = a;
    m.dart_b = b;
    m.path = std::move(path);
    return m;
}

Move Move::deperturb(int connector_arc) {
    Move m;
    m.kind = MoveKind::Deperturb;
    m.arc = connector_arc;
    return m;
}

Move Move::crosscap(ColorPair p, Dart a, Dart b, int sign, std::vector<Dart> path) {
    Move m;
    m.kind = MoveKind::Crosscap;
    m.pair = p;
    m.dart_a = a;
    m.dart_b = b;
    m.sign = sign;
    m.path = std::move(path);
    return m;
}

Move Move::tube(ColorPair p, Dart a, Dart b, std::vector<Dart> path) {
    Move m;
    m.kind = MoveKind::Tube;
    m.pair = p;
    m.dart_a = a;
    m.dart_b = b;
    m.path = std::move(path);
    return m;
}

Move Move::connect_sum(int x1, ShadowDiagram other, int x2) {
    Move m;
    m.kind = MoveKind::ConnectSum;
    m.x1 = x1;
    m.x2 = x2;
    m.other = std::make_shared<ShadowDiagram>(std::move(other));
    return m;
}

Move Move::slide(Dart on_arc, Dart over) {
    Move m;
    m.kind = MoveKind::Slide;
    m.dart_a = on_arc;
    m.dart_b = over;
    return m;
}

Move Move::split(int crossing, int diagonal) {
    Move m;
    m.kind = MoveKind::Split;
    m.crossing = crossing;
    m.diagonal = diagonal;
    return m;
}

}  // namespace trisect
