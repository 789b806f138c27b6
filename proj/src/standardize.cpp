#include "trisect/standardize.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace trisect {

namespace {

// One split + one connector contraction that removes a pair crossing while
// keeping the skeleton class. Returns true and extends `moves` on success.
bool resolve_one_crossing(ShadowDiagram& cur, ColorPair pair, const std::string& skeleton_key,
                          std::vector<Move>& moves) {
    int before = pair_crossing_count(cur, pair);
    for (int x : cur.crossings()) {
        const auto& list = cur.rotation().at(x);
        if (!contains(pair, cur.arc(list[0].arc).color) ||
            !contains(pair, cur.arc(list[1].arc).color))
            continue;
        for (int diag : {0, 1}) {
            ShadowDiagram split = split_crossing(cur, x, diag).diagram;
            for (const Arc& a : split.arcs()) {
                if (a.color != third(pair) || !a.via.empty()) continue;
                MoveResult dp{ShadowDiagram::theta()};
                try {
                    dp = deperturb(split, a.id);
                } catch (const Error&) {
                    continue;
                }
                if (pair_crossing_count(dp.diagram, pair) >= before) continue;
                if (canonical_key(dp.diagram.skeleton()) != skeleton_key) continue;
                moves.push_back(Move::split(x, diag));
                moves.push_back(Move::deperturb(a.id));
                cur = dp.diagram;
                return true;
            }
        }
    }
    return false;
}

// Bounded BFS over slides for the rare embedded-but-not-standard case.
bool slide_search(ShadowDiagram& cur, ColorPair pair, const std::string& skeleton_key,
                  std::vector<Move>& moves) {
    struct Node {
        ShadowDiagram d;
        std::vector<Move> path;
        int depth;
    };
    std::deque<Node> queue;
    std::vector<DiagramData> seen;
    auto visit = [&](const ShadowDiagram& d) {
        for (const DiagramData& s : seen)
            if (s == d.data()) return false;
        seen.push_back(d.data());
        return true;
    };
    queue.push_back({cur, {}, 0});
    visit(cur);
    int budget = 2000;
    while (!queue.empty() && budget-- > 0) {
        Node n = std::move(queue.front());
        queue.pop_front();
        if (n.d.pairing_report(pair).standard && pair_crossing_count(n.d, pair) == 0 &&
            canonical_key(n.d.skeleton()) == skeleton_key) {
            cur = n.d;
            moves.insert(moves.end(), n.path.begin(), n.path.end());
            return true;
        }
        if (n.depth >= 4) continue;
        for (const Arc& a : n.d.arcs())
            for (const Arc& l : n.d.arcs()) {
                if (a.id == l.id || a.color != l.color) continue;
                for (int s1 = 0; s1 < a.segments(); ++s1)
                    for (int e1 = 0; e1 < 2; ++e1) {
                        Dart da{a.id, s1, e1};
                        Dart dl{l.id, 0, 0};
                        // one slide per (arc, over-arc, shared face) triple
                        bool found = false;
                        for (int s2 = 0; s2 < l.segments() && !found; ++s2)
                            for (int e2 = 0; e2 < 2 && !found; ++e2)
                                if (n.d.face_of(da) == n.d.face_of(Dart{l.id, s2, e2})) {
                                    dl = {l.id, s2, e2};
                                    found = true;
                                }
                        if (!found) continue;
                        ShadowDiagram next = ShadowDiagram::theta();
                        try {
                            next = slide(n.d, da, dl).diagram;
                        } catch (const Error&) {
                            continue;
                        }
                        if (!visit(next)) continue;
                        std::vector<Move> path = n.path;
                        path.push_back(Move::slide(da, dl));
                        queue.push_back({next, std::move(path), n.depth + 1});
                    }
            }
    }
    return false;
}

}  // namespace

int pair_crossing_count(const ShadowDiagram& d, ColorPair pair) {
    int n = 0;
    for (int x : d.crossings()) {
        const auto& list = d.rotation().at(x);
        if (contains(pair, d.arc(list[0].arc).color) && contains(pair, d.arc(list[1].arc).color))
            ++n;
    }
    return n;
}

std::pair<ShadowDiagram, std::vector<Move>> standardize(const ShadowDiagram& d, ColorPair pair) {
    ShadowDiagram cur = d;
    std::vector<Move> moves;
    std::string key = canonical_key(d.skeleton());
    while (pair_crossing_count(cur, pair) > 0) {
        if (!resolve_one_crossing(cur, pair, key, moves))
            throw Error(Err::StandardizationFailed,
                        std::string("cannot resolve ") + to_string(pair) + " crossings");
    }
    if (cur.pairing_report(pair).standard) return {cur, moves};
    if (!slide_search(cur, pair, key, moves))
        throw Error(Err::StandardizationFailed,
                    std::string("no slide sequence makes ") + to_string(pair) + " standard");
    return {cur, moves};
}

}  // namespace trisect
