#include "trisect/synth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "trisect/standardize.hpp"

namespace trisect {

namespace {

// Skeleton the reconnection at (da, db) would produce: both arcs subdivided
// by a fresh bridge point pair joined by a third-color edge. The H-shaped
// reattachment (perturb, tube) puts each arc's near piece with the other's
// far piece; the crosscap's crossed reattachment puts near with near.
std::vector<Edge> predicted_edges(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db,
                                  bool crossed) {
    int x = 0;
    for (int v : d.bridge_points()) x = std::max(x, v + 1);
    int y = x + 1;
    std::vector<Edge> edges;
    int id = 0;
    for (const Arc& a : d.arcs()) {
        if (a.id == da.arc || a.id == db.arc) continue;
        edges.push_back({id++, a.ends[0], a.ends[1], a.color});
    }
    const Arc& a = d.arc(da.arc);
    const Arc& b = d.arc(db.arc);
    int alow = da.end == 0 ? x : y, ahigh = da.end == 0 ? y : x;
    int blow = (db.end == 0) == crossed ? x : y, bhigh = (db.end == 0) == crossed ? y : x;
    edges.push_back({id++, a.ends[0], alow, a.color});
    edges.push_back({id++, ahigh, a.ends[1], a.color});
    edges.push_back({id++, b.ends[0], blow, b.color});
    edges.push_back({id++, bhigh, b.ends[1], b.color});
    edges.push_back({id++, x, y, third(pair)});
    return edges;
}

TaitGraph predicted_skeleton(const ShadowDiagram& d, ColorPair pair, Dart da, Dart db,
                             bool crossed) {
    return TaitGraph::validate(predicted_edges(d, pair, da, db, crossed));
}

// Skeleton effect of deperturbing the connector between junctions p and q:
// drop the connector edge and fuse the remaining end at each junction with
// the like-colored end at the other. False when the junctions are not in the
// one-edge-per-color shape or a fuse would close an edge on itself — the
// diagram-level merge could not succeed either.
bool merge_edge_connector(std::vector<Edge>& edges, int p, int q, Color conn_color) {
    int ci = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].color == conn_color && edges[i].touches(p) && edges[i].touches(q)) {
            ci = i;
            break;
        }
    if (ci < 0) return false;
    edges.erase(edges.begin() + ci);
    auto ends_at = [&](int w) {
        std::vector<int> r;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (edges[i].u == w) r.push_back(i);
            if (edges[i].v == w) r.push_back(i);
        }
        return r;
    };
    auto ep = ends_at(p), eq = ends_at(q);
    if (ep.size() != 2 || eq.size() != 2) return false;
    if (edges[ep[0]].color == edges[ep[1]].color) return false;
    std::vector<Edge> fused;
    for (int i : ep) {
        int j = edges[eq[0]].color == edges[i].color ? eq[0] : eq[1];
        if (edges[j].color != edges[i].color || i == j) return false;
        fused.push_back({edges[i].id, edges[i].other(p), edges[j].other(q), edges[i].color});
    }
    std::set<int, std::greater<int>> drop(ep.begin(), ep.end());
    drop.insert(eq.begin(), eq.end());
    for (int i : drop) edges.erase(edges.begin() + i);
    edges.insert(edges.end(), fused.begin(), fused.end());
    return true;
}

struct Candidate {
    Dart da, db;
    std::vector<Dart> path;
};

// Ordered (da, db, route) triples eligible for a pair move. The route is the
// shortest chain of third-color segment crossings carrying the connector from
// face_of(da) to face_of(db); candidates with fewer crossings come first,
// ties kept lexicographic in (da, db).
std::vector<Candidate> move_candidates(const ShadowDiagram& d, ColorPair pair,
                                       bool same_curve) {
    // Reconnections need their chosen curves embedded, so darts on curves that
    // carry a crossing of the pairing can never host one; drop them up front.
    std::set<int> crossed;
    for (int x : d.crossings()) {
        const auto& ends = d.rotation().at(x);
        const Arc& a0 = d.arc(ends[0].arc);
        const Arc& a1 = d.arc(ends[1].arc);
        if (!contains(pair, a0.color) || !contains(pair, a1.color)) continue;
        crossed.insert(d.curve_of(a0.ends[0], pair));
        crossed.insert(d.curve_of(a1.ends[0], pair));
    }
    std::vector<Dart> darts;
    std::map<int, int> curve;
    for (const Arc& a : d.arcs()) {
        if (!contains(pair, a.color)) continue;
        int c = d.curve_of(a.ends[0], pair);
        if (crossed.count(c)) continue;
        curve[a.id] = c;
        for (int s = 0; s < a.segments(); ++s)
            for (int e = 0; e < 2; ++e) darts.push_back({a.id, s, e});
    }
    // Third-color segment darts grouped by the face on their right: crossing
    // dart t hops the connector from face_of(t) into face_of(alpha(t)).
    int nf = static_cast<int>(d.faces().size());
    std::vector<std::vector<Dart>> doors(nf);
    for (const Arc& a : d.arcs()) {
        if (a.color != third(pair)) continue;
        for (int s = 0; s < a.segments(); ++s)
            for (int e = 0; e < 2; ++e) {
                Dart t{a.id, s, e};
                doors[d.face_of(t)].push_back(t);
            }
    }
    std::vector<std::vector<std::pair<int, Dart>>> trees(nf);  // (prev face, door crossed)
    auto route = [&](int fa, int fb) -> std::optional<std::vector<Dart>> {
        auto& pre = trees[fa];
        if (pre.empty()) {
            pre.assign(nf, {-1, Dart{}});
            pre[fa].first = fa;
            std::deque<int> queue{fa};
            while (!queue.empty()) {
                int f = queue.front();
                queue.pop_front();
                for (const Dart& t : doors[f]) {
                    int g = d.face_of(d.alpha(t));
                    if (pre[g].first != -1) continue;
                    pre[g] = {f, t};
                    queue.push_back(g);
                }
            }
        }
        if (pre[fb].first == -1) return std::nullopt;
        std::vector<Dart> path;
        for (int f = fb; f != fa; f = pre[f].first) path.push_back(pre[f].second);
        std::reverse(path.begin(), path.end());
        return path;
    };
    std::vector<Candidate> out;
    for (const Dart& x : darts)
        for (const Dart& y : darts) {
            if (d.arc(x.arc).color == d.arc(y.arc).color) continue;
            bool sc = curve.at(x.arc) == curve.at(y.arc);
            if (sc != same_curve) continue;
            auto p = route(d.face_of(x), d.face_of(y));
            if (!p) continue;
            out.push_back({x, y, std::move(*p)});
        }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return a.path.size() < b.path.size();
    });
    return out;
}

// Depth-first realization of the reversed plan with backtracking: each level
// places its step's reconnection, repairing the pairing first when no
// embedded curve can host it; a level that cannot continue unwinds so the
// previous one picks another candidate. Trace entries and observer events are
// buffered so only the committed path is visible.
struct Realizer {
    const CompressionPlan& pl;
    Schedule sched;
    SynthesisTrace trace;
    std::vector<CrosscapEvent> events;
    ShadowDiagram final_diagram = ShadowDiagram::theta();
    int attempts = 0;
    long scans = 0;

    // Applied moves are the real cost; candidate scans are two orders of
    // magnitude cheaper and get their own much larger ceiling.
    static constexpr int kAttemptBudget = 20000;
    static constexpr long kScanBudget = 5000000;

    void commit(const Move& m, const ShadowDiagram& next) {
        trace.moves.push_back(m);
        trace.skeletons.push_back(next.skeleton());
    }

    void rollback(size_t moves, size_t evs) {
        trace.moves.resize(moves);
        trace.skeletons.erase(trace.skeletons.begin() + moves, trace.skeletons.end());
        events.erase(events.begin() + evs, events.end());
    }

    void charge() {
        if (++attempts > kAttemptBudget)
            throw Error(Err::MoveRealizationFailed, "candidate search budget exhausted");
    }

    bool realize(std::vector<CompressionStep>::const_reverse_iterator it, ShadowDiagram cur,
                 int cc_done) {
        if (it == pl.steps.rend()) {
            final_diagram = cur;
            return true;
        }
        ColorPair pair = opposite(it->edge.color);
        size_t base = trace.moves.size();
        size_t ebase = events.size();

        // Crossings of the pairing taint their curves; each split frees one,
        // so allowing as many nested splits as there are crossings (capped)
        // lets the step reach a fully embedded host even after several
        // crosscaps landed on this pairing.
        int cap = 0;
        for (int x : cur.crossings()) {
            const auto& ends = cur.rotation().at(x);
            if (contains(pair, cur.arc(ends[0].arc).color) &&
                contains(pair, cur.arc(ends[1].arc).color))
                ++cap;
        }
        std::vector<int> pending;
        if (attempt(it, cur, cc_done, pending, std::min(cap, 3))) return true;

        // Last resort: standardize the whole pairing, then place the move.
        if (!cur.pairing_report(pair).standard) {
            try {
                auto [sd, mv] = standardize(cur, pair);
                ShadowDiagram rep = cur;
                for (const Move& m : mv) {
                    rep = apply_move(rep, m).diagram;
                    commit(m, rep);
                }
                static_cast<void>(sd);  // identical to rep after the replays
                if (try_step(it, rep, cc_done, {})) return true;
            } catch (const Error&) {
            }
            rollback(base, ebase);
        }
        return false;
    }

    // Tries the step as-is first — it only needs its chosen curve(s)
    // embedded, so other curves of the pair may stay crossed. Failing that,
    // splits a crossing of the pairing to free a curve and recurses, carrying
    // the split connectors so the step can merge them away afterwards.
    bool attempt(std::vector<CompressionStep>::const_reverse_iterator it, const ShadowDiagram& cur,
                 int cc_done, std::vector<int>& pending, int depth) {
        if (try_step(it, cur, cc_done, pending)) return true;
        if (depth <= 0) return false;
        ColorPair pair = opposite(it->edge.color);
        size_t base = trace.moves.size();
        size_t ebase = events.size();
        for (int x : cur.crossings()) {
            const auto& ends = cur.rotation().at(x);
            if (!contains(pair, cur.arc(ends[0].arc).color) ||
                !contains(pair, cur.arc(ends[1].arc).color))
                continue;
            for (int diag : {0, 1}) {
                MoveResult r{ShadowDiagram::theta()};
                try {
                    r = split_crossing(cur, x, diag);
                } catch (const Error&) {
                    continue;
                }
                commit(Move::split(x, diag), r.diagram);
                pending.push_back(r.new_arc);
                if (attempt(it, r.diagram, cc_done, pending, depth - 1)) return true;
                pending.pop_back();
                rollback(base, ebase);
            }
        }
        return false;
    }

    // Merges `need` temporary connectors away, preferring the split
    // connectors themselves, and accepts only a final skeleton of `want`.
    // On success `seq` holds the merge chain with its intermediate diagrams.
    bool merge_connectors(const ShadowDiagram& d, const std::vector<int>& prefer, int avoid,
                          ColorPair pair, int need, const std::string& want,
                          std::vector<std::pair<int, ShadowDiagram>>& seq) {
        if (need == 0) {
            if (canonical_key(d.skeleton()) != want) return false;
            return true;
        }
        std::vector<int> conns;
        for (int p : prefer)
            if (d.has_arc(p) && d.arc(p).via.empty()) conns.push_back(p);
        // Generic connectors almost never land on the target skeleton, so
        // they only back up the last merge; earlier merges stick to the
        // split connectors to keep the search shallow.
        if (need == 1)
            for (const Arc& a : d.arcs())
                if (a.color == third(pair) && a.via.empty() && a.id != avoid &&
                    std::find(conns.begin(), conns.end(), a.id) == conns.end())
                    conns.push_back(a.id);
        for (int conn : conns) {
            charge();
            ShadowDiagram dd = ShadowDiagram::theta();
            try {
                dd = deperturb(d, conn).diagram;
            } catch (const Error&) {
                continue;
            }
            seq.emplace_back(conn, dd);
            if (merge_connectors(dd, prefer, avoid, pair, need - 1, want, seq)) return true;
            seq.pop_back();
        }
        return false;
    }

    // Tries every candidate reconnection of the step on `cur`. When `pending`
    // names temporary split connectors, deperturbations restoring the step's
    // target skeleton must follow the move for a candidate to count.
    bool try_step(std::vector<CompressionStep>::const_reverse_iterator it,
                  const ShadowDiagram& cur, int cc_done, const std::vector<int>& pending) {
        const CompressionStep& step = *it;
        ColorPair pair = opposite(step.edge.color);
        const std::string want = canonical_key(step.pre_graph);
        int sign = step.kind == StepKind::C ? (cc_done < sched.n_plus ? +1 : -1) : 0;
        size_t mark = trace.moves.size();
        size_t emark = events.size();
        // A routed move drags the db arc across third-color segments, so the
        // crossings it leaves pair db's color with the third color. Prefer
        // candidates whose leftovers no later step needs standard.
        bool later[3] = {false, false, false};
        for (auto jt = std::next(it); jt != pl.steps.rend(); ++jt)
            later[static_cast<int>(opposite(jt->edge.color))] = true;
        auto cands = move_candidates(cur, pair, step.kind != StepKind::T);
        std::stable_sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
            auto clash = [&](const Candidate& c) {
                return !c.path.empty() &&
                       later[static_cast<int>(opposite(cur.arc(c.da.arc).color))];
            };
            return clash(a) < clash(b);
        });
        for (const auto& [da, db, path] : cands) {
            if (++scans > kScanBudget)
                throw Error(Err::MoveRealizationFailed, "candidate search budget exhausted");
            if (pending.empty()) {
                try {
                    if (canonical_key(predicted_skeleton(cur, pair, da, db,
                                                         step.kind == StepKind::C)) != want)
                        continue;
                } catch (const Error&) {
                    continue;
                }
            }
            charge();
            ShadowDiagram next = ShadowDiagram::theta();
            int fresh = -1;
            try {
                MoveResult r = step.kind == StepKind::P ? perturb(cur, pair, da, db, path)
                               : step.kind == StepKind::T
                                   ? tube(cur, pair, da, db, path)
                                   : crosscap_sum(cur, pair, da, db, sign, path);
                next = r.diagram;
                fresh = r.new_arc;
            } catch (const Error&) {
                continue;
            }
            Move main = step.kind == StepKind::P   ? Move::perturb(pair, da, db, path)
                        : step.kind == StepKind::T ? Move::tube(pair, da, db, path)
                                                   : Move::crosscap(pair, da, db, sign, path);
            ShadowDiagram after = next;
            std::vector<std::pair<int, ShadowDiagram>> seq;
            if (!pending.empty()) {
                if (!merge_connectors(next, pending, fresh, pair,
                                      static_cast<int>(pending.size()), want, seq))
                    continue;
                after = seq.back().second;
            } else {
                if (canonical_key(next.skeleton()) != want) continue;
            }
            commit(main, next);
            for (const auto& [conn, dd] : seq) commit(Move::deperturb(conn), dd);
            int cc_next = cc_done;
            if (step.kind == StepKind::C) {
                events.push_back({cur, pair, da, db, sign});
                ++(sign > 0 ? trace.n_plus : trace.n_minus);
                ++cc_next;
            }
            if (realize(std::next(it), after, cc_next)) return true;
            if (step.kind == StepKind::C) --(sign > 0 ? trace.n_plus : trace.n_minus);
            rollback(mark, emark);
        }
        return false;
    }
};

}  // namespace

Schedule euler_schedule(int crosscaps, int e) {
    if (crosscaps < 0) throw Error(Err::OutOfRange, "negative crosscap count");
    if (e < -2 * crosscaps || e > 2 * crosscaps)
        throw Error(Err::OutOfRange, "euler number " + std::to_string(e) + " outside [" +
                                         std::to_string(-2 * crosscaps) + ", " +
                                         std::to_string(2 * crosscaps) + "]");
    if (e % 2 != 0 || (e - 2 * crosscaps) % 4 != 0)
        throw Error(Err::ParityMismatch, "euler number " + std::to_string(e) +
                                             " not congruent to " +
                                             std::to_string(2 * crosscaps) + " mod 4");
    Schedule s;
    s.n_plus = (2 * crosscaps + e) / 4;
    s.n_minus = crosscaps - s.n_plus;
    return s;
}

SynthesisResult synthesize(const TaitGraph& g, std::optional<int> euler_number,
                           const CrosscapObserver& observer) {
    SurfaceProfile prof = surface_profile(g);
    if (prof.orientable && euler_number.has_value())
        throw Error(Err::PreconditionViolated, "euler target only valid for nonorientable graphs");
    CompressionPlan pl = plan(g);
    int crosscaps = 0;
    for (const CompressionStep& s : pl.steps)
        if (s.kind == StepKind::C) ++crosscaps;
    int e = 0;
    if (!prof.orientable) e = euler_number ? *euler_number : (crosscaps % 2 == 0 ? 0 : 2);
    Schedule sched = euler_schedule(crosscaps, e);

    Realizer rz{pl, sched, {}, {}, ShadowDiagram::theta(), 0, 0};
    if (!rz.realize(pl.steps.rbegin(), ShadowDiagram::theta(), 0))
        throw Error(Err::MoveRealizationFailed,
                    "no combination of dart choices realizes the plan");
    SynthesisResult out{ShadowDiagram::theta(), std::move(rz.trace), {}};
    ShadowDiagram cur = rz.final_diagram;
    // Cosmetic pass: put whatever pairings still admit it into standard
    // position (the drawing convention); pairs that stay crossed are fine.
    for (ColorPair pair : all_pairs) {
        if (cur.pairing_report(pair).standard) continue;
        try {
            auto [sd, mv] = standardize(cur, pair);
            for (const Move& m : mv) {
                cur = apply_move(cur, m).diagram;
                out.trace.moves.push_back(m);
                out.trace.skeletons.push_back(cur.skeleton());
            }
            static_cast<void>(sd);
        } catch (const Error&) {
            // leave the pairing crossed
        }
    }
    if (observer)
        for (const CrosscapEvent& ev : rz.events) observer(ev);
    auto witness = colored_isomorphic(cur.skeleton(), g);
    if (!witness)
        throw Error(Err::MoveRealizationFailed, "final skeleton does not match the input graph");

    out.diagram = cur;
    out.certificate.orientable = prof.orientable;
    out.certificate.genus = prof.genus;
    out.certificate.euler_characteristic = prof.euler_characteristic;
    out.certificate.euler_number = e;
    out.certificate.n_plus = sched.n_plus;
    out.certificate.n_minus = sched.n_minus;
    out.certificate.bridge_points = static_cast<int>(cur.bridge_points().size());
    out.certificate.iso_witness = *witness;
    return out;
}

ShadowDiagram replay(const std::vector<Move>& moves) {
    ShadowDiagram cur = ShadowDiagram::theta();
    for (const Move& m : moves) cur = apply_move(cur, m).diagram;
    return cur;
}

VerifyReport verify(const TaitGraph& g, const ShadowDiagram& d, const SynthesisTrace& trace,
                    const SurfaceCertificate& cert) {
    VerifyReport rep;
    auto note = [&](const std::string& s) { rep.notes.push_back(s); };

    auto iso = colored_isomorphic(d.skeleton(), g);
    rep.skeleton_isomorphic = iso.has_value();
    if (!iso) note("skeleton is not colored-isomorphic to the input graph");
    if (iso && !cert.iso_witness.empty()) {
        bool ok = true;
        const TaitGraph skel = d.skeleton();
        for (const Edge& e : skel.edges()) {
            auto u = cert.iso_witness.find(e.u);
            auto v = cert.iso_witness.find(e.v);
            if (u == cert.iso_witness.end() || v == cert.iso_witness.end() ||
                !g.has_vertex(u->second) || !g.has_vertex(v->second) ||
                g.edge(g.incident(u->second, e.color)).other(u->second) != v->second) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            rep.skeleton_isomorphic = false;
            note("certificate isomorphism witness is not a colored isomorphism");
        }
    }

    rep.sphere_map = d.euler_characteristic() == 2;
    if (!rep.sphere_map) note("map is not a sphere");

    rep.curves_match_patches = true;
    SurfaceProfile dp = surface_profile(d.skeleton());
    for (ColorPair p : all_pairs) {
        PairingReport pr = d.pairing_report(p);
        if (!pr.standard) continue;
        if (pr.closed_curves != dp.patch_numbers[static_cast<int>(p)]) {
            rep.curves_match_patches = false;
            note(std::string("standard ") + to_string(p) +
                 " pairing curve count differs from its patch number");
        }
    }

    SurfaceProfile gp = surface_profile(g);
    rep.characteristic_consistent =
        cert.orientable == gp.orientable && cert.genus == gp.genus &&
        cert.euler_characteristic == gp.euler_characteristic &&
        cert.bridge_points == static_cast<int>(d.bridge_points().size()) &&
        cert.n_plus == trace.n_plus && cert.n_minus == trace.n_minus &&
        (cert.orientable
             ? cert.euler_number == 0 && cert.n_plus == 0 && cert.n_minus == 0
             : 2 * (cert.n_plus - cert.n_minus) == cert.euler_number &&
                   cert.n_plus + cert.n_minus == cert.genus);
    if (!rep.characteristic_consistent)
        note("certificate invariants disagree with the graph profile or tallies");

    try {
        rep.trace_replays = replay(trace.moves) == d;
        if (!rep.trace_replays) note("replaying the trace does not reproduce the diagram");
    } catch (const Error& err) {
        rep.trace_replays = false;
        note(std::string("trace replay failed: ") + err.what());
    }

    rep.euler_in_range =
        cert.orientable
            ? cert.euler_number == 0
            : std::abs(cert.euler_number) <= 2 * cert.genus &&
                  (cert.euler_number - 2 * cert.genus) % 4 == 0;
    if (!rep.euler_in_range) note("euler number outside the admissible range");
    return rep;
}

}  // namespace trisect
