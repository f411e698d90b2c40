#include "queuelay/game.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace queuelay {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw GameError(msg);
}

std::vector<int> rank_of(const std::vector<int>& spine) {
    std::vector<int> r(spine.size(), -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) r[spine[i]] = i;
    return r;
}

// Shape checks shared by apply_move and the reply generators. Returns the
// mirrored clique (ascending) for paired games, empty otherwise.
std::vector<int> check_move_shape(const GameState& s, const AliceMove& mv) {
    const int k = s.config.k;
    require(mv.m >= 1, "a move must add at least one child");
    require(static_cast<int>(mv.clique.size()) == k, "clique size must equal k");
    require(std::is_sorted(mv.clique.begin(), mv.clique.end()) &&
                std::adjacent_find(mv.clique.begin(), mv.clique.end()) == mv.clique.end(),
            "clique ids must be strictly ascending");
    require(s.is_clique(mv.clique), "move does not name a clique");
    for (int v : mv.clique) require(s.side[v] == 0, "moves name left-component cliques");
    std::vector<int> clique_copy;
    if (s.config.paired()) {
        for (int v : mv.clique) {
            require(s.copy_of[v] >= 0, "left vertex has no mirrored partner");
            clique_copy.push_back(s.copy_of[v]);
        }
        std::sort(clique_copy.begin(), clique_copy.end());
        require(s.is_clique(clique_copy), "mirrored clique is missing");
    }
    return clique_copy;
}

}  // namespace

int GameState::queue_count() const {
    int q = 0;
    for (int id : equeue) q = std::max(q, id + 1);
    return q;
}

int GameState::queue_of(int u, int v) const {
    if (u == v) return -1;
    Edge e(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == e) return equeue[i];
    return -1;
}

LinearOrder GameState::order() const { return LinearOrder::from_sequence(spine); }

Graph GameState::graph() const { return Graph(vertex_count(), edges); }

QueueLayout GameState::layout(const Graph& g) const {
    std::unordered_map<std::uint64_t, int> by_key;
    for (std::size_t i = 0; i < edges.size(); ++i) by_key[edge_key(edges[i])] = equeue[i];
    QueueLayout L;
    L.order = order();
    L.queue_of.reserve(g.edge_count());
    for (const Edge& e : g.edges()) L.queue_of.push_back(by_key.at(edge_key(e)));
    return L;
}

bool GameState::is_clique(const std::vector<int>& vertices) const {
    if (vertices.empty()) return false;
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(edges.size() * 2);
    for (const Edge& e : edges) keys.insert(edge_key(e));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= vertex_count()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) return false;
            if (!keys.count(edge_key(vertices[i], vertices[j]))) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> GameState::cliques(int side_filter) const {
    std::vector<std::vector<int>> out;
    std::vector<int> init_left, init_right;
    for (int v = 0; v < vertex_count(); ++v)
        if (born[v] == 0) (side[v] == 0 ? init_left : init_right).push_back(v);
    if (side_filter != 1 && !init_left.empty()) out.push_back(init_left);
    if (side_filter != 0 && !init_right.empty()) out.push_back(init_right);
    for (int v = 0; v < vertex_count(); ++v) {
        if (born[v] == 0) continue;
        if (side_filter >= 0 && side[v] != side_filter) continue;
        for (int skip : parent[v]) {
            std::vector<int> c;
            for (int p : parent[v])
                if (p != skip) c.push_back(p);
            c.push_back(v);
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

GameState apply_move(const GameState& s, const AliceMove& mv, const BobMove& reply) {
    const GameConfig& cfg = s.config;
    const int k = cfg.k;
    const int m = mv.m;
    const int n0 = s.vertex_count();
    const std::vector<int> clique_copy = check_move_shape(s, mv);
    const int fresh = (cfg.paired() ? 2 : 1) * m;

    require(static_cast<int>(reply.spine_after.size()) == n0 + fresh,
            "reply spine has the wrong size");
    {
        std::vector<char> seen(n0 + fresh, 0);
        int old_pos = 0;
        int last_left = -1, last_right = -1;
        for (int v : reply.spine_after) {
            require(v >= 0 && v < n0 + fresh && !seen[v], "reply spine is not a permutation");
            seen[v] = 1;
            if (v < n0) {
                require(old_pos < n0 && s.spine[old_pos] == v,
                        "reply spine reorders existing vertices");
                ++old_pos;
            } else if (v < n0 + m) {
                require(v > last_left, "left children must appear in id order");
                last_left = v;
            } else {
                require(v > last_right, "right children must appear in id order");
                last_right = v;
            }
        }
        require(old_pos == n0, "reply spine dropped existing vertices");
    }
    require(static_cast<int>(reply.queues.size()) == fresh * k,
            "reply assigns the wrong number of edges");
    {
        int used = s.queue_count();
        for (int q : reply.queues) {
            require(q >= 0 && q <= used, "fresh queues must take the smallest unused id");
            if (q == used) ++used;
        }
    }

    GameState t = s;
    t.spine = reply.spine_after;
    const int round_no = s.round_count() + 1;
    RoundRecord rec;
    rec.clique = mv.clique;
    rec.clique_copy = clique_copy;
    int slot = 0;
    for (int i = 0; i < m; ++i) {
        const int x = n0 + i;
        t.side.push_back(0);
        t.copy_of.push_back(-1);
        t.born.push_back(round_no);
        t.parent.push_back(mv.clique);
        rec.children.push_back(x);
        for (int c : mv.clique) {
            t.edges.emplace_back(c, x);
            t.equeue.push_back(reply.queues[slot++]);
        }
    }
    if (cfg.paired()) {
        for (int i = 0; i < m; ++i) {
            const int y = n0 + m + i;
            t.side.push_back(1);
            t.copy_of.push_back(n0 + i);
            t.copy_of[n0 + i] = y;
            t.born.push_back(round_no);
            t.parent.push_back(clique_copy);
            rec.children_copy.push_back(y);
            for (int c : clique_copy) {
                t.edges.emplace_back(c, y);
                t.equeue.push_back(reply.queues[slot++]);
            }
        }
    }
    t.rounds.push_back(std::move(rec));
    return t;
}

bool condition_holds(const GameState& s, int c) {
    if (c < 2 || c > 7) throw GameError("condition index must be 2..7");
    if (c > s.config.level) return true;
    const int n = s.vertex_count();
    const std::vector<int> rk = rank_of(s.spine);

    switch (c) {
        case 2: {
            if (s.rounds.empty()) return true;
            const RoundRecord& r = s.rounds.front();
            for (int pass = 0; pass < 2; ++pass) {
                const auto& kids = pass == 0 ? r.children : r.children_copy;
                if (kids.empty()) continue;
                int init_max = -1;
                for (int v = 0; v < n; ++v)
                    if (s.born[v] == 0 && s.side[v] == pass) init_max = std::max(init_max, rk[v]);
                for (int x : kids)
                    if (rk[x] < init_max) return false;
            }
            return true;
        }
        case 3: {
            for (int ri = 0; ri < s.round_count(); ++ri) {
                for (int pass = 0; pass < 2; ++pass) {
                    const auto& kids =
                        pass == 0 ? s.rounds[ri].children : s.rounds[ri].children_copy;
                    if (kids.size() <= 1) continue;
                    int lo = INT_MAX, hi = -1;
                    for (int x : kids) {
                        lo = std::min(lo, rk[x]);
                        hi = std::max(hi, rk[x]);
                    }
                    for (int v = 0; v < n; ++v)
                        if (s.born[v] <= ri && s.side[v] == pass && rk[v] > lo && rk[v] < hi)
                            return false;
                }
            }
            return true;
        }
        case 4: {
            for (const RoundRecord& r : s.rounds) {
                for (int pass = 0; pass < 2; ++pass) {
                    const auto& kids = pass == 0 ? r.children : r.children_copy;
                    const auto& cl = pass == 0 ? r.clique : r.clique_copy;
                    if (kids.size() <= 1) continue;
                    for (int cv : cl) {
                        const int q0 = s.queue_of(cv, kids.front());
                        for (int x : kids)
                            if (s.queue_of(cv, x) != q0) return false;
                    }
                }
            }
            return true;
        }
        case 5: {
            for (const RoundRecord& r : s.rounds) {
                for (int pass = 0; pass < 2; ++pass) {
                    const auto& kids = pass == 0 ? r.children : r.children_copy;
                    const auto& cl = pass == 0 ? r.clique : r.clique_copy;
                    if (kids.empty()) continue;
                    int cmax = -1;
                    for (int cv : cl) cmax = std::max(cmax, rk[cv]);
                    for (int x : kids)
                        if (rk[x] < cmax) return false;
                    for (int x : kids) {
                        std::vector<int> qs;
                        for (int cv : cl) qs.push_back(s.queue_of(cv, x));
                        std::sort(qs.begin(), qs.end());
                        if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) return false;
                    }
                }
            }
            return true;
        }
        case 6: {
            if (!s.config.paired()) return true;
            for (const auto& C : s.cliques(0)) {
                std::vector<int> byrank = C;
                std::sort(byrank.begin(), byrank.end(),
                          [&](int a, int b) { return rk[a] < rk[b]; });
                int prev = -1;
                for (int v : byrank) {
                    const int w = s.copy_of[v];
                    if (w < 0) return false;
                    if (!(prev < rk[v] && rk[v] < rk[w])) return false;
                    prev = rk[w];
                }
            }
            for (const RoundRecord& r : s.rounds) {
                if (r.children_copy.size() != r.children.size()) return false;
                int both = -1;
                for (int v : r.clique) both = std::max(both, rk[v]);
                for (int v : r.clique_copy) both = std::max(both, rk[v]);
                for (int x : r.children) {
                    const int y = s.copy_of[x];
                    if (y < 0) return false;
                    if (!(rk[x] > both && rk[y] > rk[x])) return false;
                }
            }
            for (std::size_t i = 0; i < s.edges.size(); ++i) {
                const int a = s.copy_of[s.edges[i].u];
                const int b = s.copy_of[s.edges[i].v];
                if (a < 0 || b < 0) return false;
                if (s.queue_of(a, b) != s.equeue[i]) return false;
            }
            return true;
        }
        case 7: {
            if (!s.config.paired()) return true;
            // Only edges of the left component constrain anything here, and only via
            // the endpoint that comes first in the spine; the mirrored statement for
            // the right component is already implied by the shared-queue rule.
            for (std::size_t i = 0; i < s.edges.size(); ++i) {
                const int a = s.edges[i].u, b = s.edges[i].v;
                if (s.side[a] != 0) continue;
                const int a2 = s.copy_of[a], b2 = s.copy_of[b];
                if (a2 < 0 || b2 < 0) return false;
                const int reach = std::max(std::max(rk[a], rk[b]), std::max(rk[a2], rk[b2]));
                const int lo = rk[a] < rk[b] ? a : b;
                for (int x = 0; x < n; ++x) {
                    if (s.born[x] == 0 || rk[x] <= reach) continue;
                    const auto& pc = s.parent[x];
                    if (!std::binary_search(pc.begin(), pc.end(), lo)) continue;
                    if (s.queue_of(lo, x) == s.equeue[i]) return false;
                }
            }
            return true;
        }
        default:
            return true;
    }
}

int first_violated_condition(const GameState& s, ValidationResult* fault) {
    const Graph g = s.graph();
    const ValidationResult res = validate_layout(g, s.layout(g), s.config.ell);
    if (!validation_ok(res)) {
        if (fault) *fault = res;
        return 1;
    }
    for (int c = 2; c <= s.config.level && c <= 7; ++c)
        if (!condition_holds(s, c)) return c;
    return 0;
}

namespace {

// Splices fresh ids into the spine: item i goes into old-spine gap gaps[i]
// (0..n0); gaps are nondecreasing, ties keep item order.
std::vector<int> splice(const std::vector<int>& old_spine, const std::vector<int>& ids,
                        const std::vector<int>& gaps) {
    std::vector<int> out;
    out.reserve(old_spine.size() + ids.size());
    std::size_t item = 0;
    for (int g = 0; g <= static_cast<int>(old_spine.size()); ++g) {
        while (item < ids.size() && gaps[item] == g) out.push_back(ids[item++]);
        if (g < static_cast<int>(old_spine.size())) out.push_back(old_spine[g]);
    }
    return out;
}

struct PlacementBounds {
    int min_gap_left = 0;
    int min_gap_right = 0;
};

PlacementBounds placement_bounds(const GameState& s, const AliceMove& mv,
                                 const std::vector<int>& clique_copy) {
    const GameConfig& cfg = s.config;
    const std::vector<int> rk = rank_of(s.spine);
    PlacementBounds b;
    const int round_no = s.round_count() + 1;
    if (cfg.level >= 2 && round_no == 1) {
        for (int v = 0; v < s.vertex_count(); ++v)
            if (s.born[v] == 0) {
                int& slot = s.side[v] == 0 ? b.min_gap_left : b.min_gap_right;
                slot = std::max(slot, rk[v] + 1);
            }
    }
    if (cfg.level >= 5) {
        for (int c : mv.clique) b.min_gap_left = std::max(b.min_gap_left, rk[c] + 1);
        for (int c : clique_copy) b.min_gap_right = std::max(b.min_gap_right, rk[c] + 1);
    }
    if (cfg.level >= 6) {
        int both = 0;
        for (int c : mv.clique) both = std::max(both, rk[c] + 1);
        for (int c : clique_copy) both = std::max(both, rk[c] + 1);
        b.min_gap_left = std::max(b.min_gap_left, both);
        b.min_gap_right = std::max(b.min_gap_right, both);
    }
    return b;
}

// All candidate spines for the reply: fresh ids in id order per component,
// nondecreasing gaps, component interleavings for paired games. Structural
// placement constraints of the active conditions prune here; every emitted
// spine is still re-checked against the full conditions later.
std::vector<std::vector<int>> candidate_spines(const GameState& s, const AliceMove& mv,
                                               const std::vector<int>& clique_copy) {
    const GameConfig& cfg = s.config;
    const int m = mv.m;
    const int n0 = s.vertex_count();
    const PlacementBounds b = placement_bounds(s, mv, clique_copy);
    std::vector<std::vector<int>> spines;

    if (!cfg.paired()) {
        std::vector<int> ids(m);
        for (int i = 0; i < m; ++i) ids[i] = n0 + i;
        if (cfg.level >= 3 || m == 1) {
            for (int g = b.min_gap_left; g <= n0; ++g)
                spines.push_back(splice(s.spine, ids, std::vector<int>(m, g)));
        } else {
            std::vector<int> gaps(m, 0);
            std::function<void(int, int)> rec = [&](int i, int lo) {
                if (i == m) {
                    spines.push_back(splice(s.spine, ids, gaps));
                    return;
                }
                for (int g = lo; g <= n0; ++g) {
                    gaps[i] = g;
                    rec(i + 1, g);
                }
            };
            rec(0, b.min_gap_left);
        }
        return spines;
    }

    // Paired: merge left ids (ascending) and right ids (ascending); the i-th
    // left child must precede the i-th right child, and each item's gap
    // respects its component bound.
    std::vector<int> ids, gaps;
    std::function<void(int, int, int)> rec = [&](int lefts, int rights, int lo) {
        if (lefts == m && rights == m) {
            spines.push_back(splice(s.spine, ids, gaps));
            return;
        }
        if (lefts < m) {
            const int id = n0 + lefts;
            for (int g = std::max(lo, b.min_gap_left); g <= n0; ++g) {
                ids.push_back(id);
                gaps.push_back(g);
                rec(lefts + 1, rights, g);
                ids.pop_back();
                gaps.pop_back();
            }
        }
        if (rights < lefts) {
            const int id = n0 + m + rights;
            for (int g = std::max(lo, b.min_gap_right); g <= n0; ++g) {
                ids.push_back(id);
                gaps.push_back(g);
                rec(lefts, rights + 1, g);
                ids.pop_back();
                gaps.pop_back();
            }
        }
    };
    rec(0, 0, 0);
    return spines;
}

// All queue assignments for the fresh edges, honoring the structural forcing
// of the active conditions (shared twin queues, mirrored queues, per-child
// pairwise difference) and the minimal-fresh-id policy.
std::vector<std::vector<int>> candidate_assignments(const GameState& s, const AliceMove& mv) {
    const GameConfig& cfg = s.config;
    const int k = cfg.k;
    const int m = mv.m;
    const int base_used = s.queue_count();
    const int left_slots = m * k;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(left_slots, -1);

    std::function<void(int, int)> rec = [&](int slot, int used) {
        if (slot == left_slots) {
            std::vector<int> full = cur;
            if (cfg.paired())
                full.insert(full.end(), cur.begin(), cur.end());
            out.push_back(std::move(full));
            return;
        }
        const int child = slot / k;
        const int j = slot % k;
        if (cfg.level >= 4 && child > 0) {
            cur[slot] = cur[j];
            rec(slot + 1, used);
            return;
        }
        for (int q = 0; q <= used; ++q) {
            if (cfg.level >= 5) {
                bool dup = false;
                for (int j2 = 0; j2 < j; ++j2)
                    if (cur[child * k + j2] == q) dup = true;
                if (dup) continue;
            }
            cur[slot] = q;
            rec(slot + 1, q == used ? used + 1 : used);
        }
        cur[slot] = -1;
    };
    rec(0, base_used);
    return out;
}

}  // namespace

std::vector<BobMove> reply_candidates(const GameState& s, const AliceMove& mv) {
    const std::vector<int> clique_copy = check_move_shape(s, mv);
    const std::vector<std::vector<int>> spines = candidate_spines(s, mv, clique_copy);
    const std::vector<std::vector<int>> assigns = candidate_assignments(s, mv);

    std::vector<BobMove> keep;
    for (const auto& sp : spines) {
        for (const auto& qs : assigns) {
            BobMove bm{sp, qs};
            const GameState t = apply_move(s, mv, bm);
            bool ok = true;
            for (int c = 2; c <= s.config.level && c <= 7 && ok; ++c)
                ok = condition_holds(t, c);
            if (ok) keep.push_back(std::move(bm));
        }
    }
    std::sort(keep.begin(), keep.end(), [](const BobMove& a, const BobMove& b) {
        if (a.spine_after != b.spine_after) return a.spine_after < b.spine_after;
        return a.queues < b.queues;
    });
    keep.erase(std::unique(keep.begin(), keep.end(),
                           [](const BobMove& a, const BobMove& b) {
                               return a.spine_after == b.spine_after && a.queues == b.queues;
                           }),
               keep.end());
    return keep;
}

std::vector<BobMove> legal_bob_moves(const GameState& s, const AliceMove& mv) {
    std::vector<BobMove> cands = reply_candidates(s, mv);
    std::vector<BobMove> out;
    for (BobMove& bm : cands) {
        const GameState t = apply_move(s, mv, bm);
        const Graph g = t.graph();
        if (validation_ok(validate_layout(g, t.layout(g), s.config.ell)))
            out.push_back(std::move(bm));
    }
    return out;
}

std::optional<BobMove> sample_legal_reply(const GameState& s, const AliceMove& mv, Rng& rng,
                                          int retries) {
    const GameConfig& cfg = s.config;
    const int k = cfg.k;
    const int m = mv.m;
    const int n0 = s.vertex_count();
    const std::vector<int> clique_copy = check_move_shape(s, mv);
    const PlacementBounds b = placement_bounds(s, mv, clique_copy);
    const int fresh = (cfg.paired() ? 2 : 1) * m;

    for (int attempt = 0; attempt < retries; ++attempt) {
        // Placement: random gaps under the structural bounds.
        std::vector<int> ids, gaps;
        if (!cfg.paired()) {
            for (int i = 0; i < m; ++i) ids.push_back(n0 + i);
            if (cfg.level >= 3 || m == 1) {
                const int g = b.min_gap_left + rng.below_int(n0 - b.min_gap_left + 1);
                gaps.assign(m, g);
            } else {
                for (int i = 0; i < m; ++i)
                    gaps.push_back(b.min_gap_left + rng.below_int(n0 - b.min_gap_left + 1));
                std::sort(gaps.begin(), gaps.end());
            }
        } else {
            int lefts = 0, rights = 0, lo = 0;
            while (lefts < m || rights < m) {
                const bool can_left = lefts < m;
                const bool can_right = rights < lefts;
                const bool take_left = can_left && (!can_right || rng.coin());
                const int floor_gap =
                    std::max(lo, take_left ? b.min_gap_left : b.min_gap_right);
                const int g = floor_gap + rng.below_int(n0 - floor_gap + 1);
                ids.push_back(take_left ? n0 + lefts++ : n0 + m + rights++);
                gaps.push_back(g);
                lo = g;
            }
        }
        const std::vector<int> spine2 = splice(s.spine, ids, gaps);
        const LinearOrder ord2 = LinearOrder::from_sequence(spine2);
        const std::vector<int> rk = rank_of(spine2);

        // Mirror map over old and fresh vertices.
        std::vector<int> copyv = s.copy_of;
        copyv.resize(n0 + fresh, -1);
        if (cfg.paired())
            for (int i = 0; i < m; ++i) {
                copyv[n0 + i] = n0 + m + i;
                copyv[n0 + m + i] = n0 + i;
            }

        // Incremental layout state.
        int used = s.queue_count();
        std::vector<std::vector<Edge>> qedges(used);
        std::vector<std::set<int>> vqueues(n0 + fresh);
        std::vector<std::pair<Edge, int>> all_edges;
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            qedges[s.equeue[i]].push_back(s.edges[i]);
            vqueues[s.edges[i].u].insert(s.equeue[i]);
            vqueues[s.edges[i].v].insert(s.equeue[i]);
            all_edges.emplace_back(s.edges[i], s.equeue[i]);
        }
        const auto placeable = [&](const Edge& e, int q) {
            if (!vqueues[e.u].count(q) &&
                static_cast<int>(vqueues[e.u].size()) >= cfg.ell)
                return false;
            if (!vqueues[e.v].count(q) &&
                static_cast<int>(vqueues[e.v].size()) >= cfg.ell)
                return false;
            if (q < static_cast<int>(qedges.size()))
                for (const Edge& f : qedges[q])
                    if (nests(e, f, ord2)) return false;
            return true;
        };
        const auto commit = [&](const Edge& e, int q) {
            if (q == used) {
                qedges.emplace_back();
                ++used;
            }
            qedges[q].push_back(e);
            vqueues[e.u].insert(q);
            vqueues[e.v].insert(q);
            all_edges.emplace_back(e, q);
        };
        // Queues an edge (c, x) must avoid under the mirrored-edge-diversity
        // condition: queues of edges whose spine-first endpoint is c and whose
        // four mirrored endpoints all sit left of x.
        const auto diverse_forbidden = [&](int c, int x) {
            std::set<int> bad;
            if (cfg.level < 7) return bad;
            for (const auto& [f, q] : all_edges) {
                if (f.u != c && f.v != c) continue;
                const int other = f.u == c ? f.v : f.u;
                if (rk[other] < rk[c]) continue;
                const int fu2 = copyv[f.u], fv2 = copyv[f.v];
                if (fu2 < 0 || fv2 < 0) continue;
                const int reach = std::max(std::max(rk[f.u], rk[f.v]),
                                           std::max(rk[fu2], rk[fv2]));
                if (rk[x] > reach) bad.insert(q);
            }
            return bad;
        };

        std::vector<int> queues;
        bool dead = false;
        const int passes = cfg.paired() ? 2 : 1;
        for (int pass = 0; pass < passes && !dead; ++pass) {
            const std::vector<int>& cl = pass == 0 ? mv.clique : clique_copy;
            for (int i = 0; i < m && !dead; ++i) {
                const int x = pass == 0 ? n0 + i : n0 + m + i;
                for (int j = 0; j < k && !dead; ++j) {
                    const Edge e(cl[j], x);
                    int forced = -1;
                    if (pass == 1)
                        forced = queues[i * k + j];
                    else if (cfg.level >= 4 && i > 0)
                        forced = queues[j];
                    if (forced >= 0) {
                        if (!placeable(e, forced)) {
                            dead = true;
                            break;
                        }
                        commit(e, forced);
                        queues.push_back(forced);
                        continue;
                    }
                    const std::set<int> bad = diverse_forbidden(cl[j], x);
                    std::vector<int> allowed;
                    for (int q = 0; q <= used; ++q) {
                        if (cfg.level >= 5) {
                            bool dup = false;
                            for (int j2 = 0; j2 < j; ++j2)
                                if (queues[i * k + j2 + (pass == 1 ? m * k : 0)] == q)
                                    dup = true;
                            if (dup) continue;
                        }
                        if (bad.count(q)) continue;
                        if (placeable(e, q)) allowed.push_back(q);
                    }
                    if (allowed.empty()) {
                        dead = true;
                        break;
                    }
                    const int q = allowed[rng.below_int(static_cast<int>(allowed.size()))];
                    commit(e, q);
                    queues.push_back(q);
                }
            }
        }
        if (dead) continue;
        BobMove bm{spine2, queues};
        const GameState t = apply_move(s, mv, bm);
        if (first_violated_condition(t) == 0) return bm;
    }
    return std::nullopt;
}

namespace {

// Restricted growth strings: every canonical way to partition `items`
// labeled objects into queues.
std::vector<std::vector<int>> growth_strings(int items) {
    std::vector<std::vector<int>> out;
    if (items == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur(items, 0);
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == items) {
            out.push_back(cur);
            return;
        }
        for (int q = 0; q <= mx + 1; ++q) {
            cur[i] = q;
            rec(i + 1, std::max(mx, q));
        }
    };
    cur[0] = 0;
    rec(1, 0);
    return out;
}

}  // namespace

std::vector<GameState> initial_states(const GameConfig& config) {
    const int k = config.k;
    if (k < 1) throw GameError("k must be positive");
    if (config.ell < 1) throw GameError("ell must be positive");
    if (config.level < 1 || config.level > 7) throw GameError("level must be 1..7");
    const int ec = k * (k - 1) / 2;
    if (ec > 10)
        throw BudgetError("too many initial clique edges to enumerate assignments");

    GameState base;
    base.config = config;
    if (!config.paired()) {
        for (int v = 0; v < k; ++v) {
            base.spine.push_back(v);
            base.side.push_back(0);
            base.copy_of.push_back(-1);
            base.born.push_back(0);
            base.parent.emplace_back();
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) base.edges.emplace_back(i, j);
    } else {
        for (int v = 0; v < 2 * k; ++v) {
            base.side.push_back(v < k ? 0 : 1);
            base.copy_of.push_back(v < k ? v + k : v - k);
            base.born.push_back(0);
            base.parent.emplace_back();
        }
        for (int i = 0; i < k; ++i) {
            base.spine.push_back(i);
            base.spine.push_back(k + i);
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) base.edges.emplace_back(i, j);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) base.edges.emplace_back(k + i, k + j);
    }

    std::vector<GameState> out;
    for (const auto& rgs : growth_strings(ec)) {
        GameState st = base;
        st.equeue = rgs;
        if (config.paired()) st.equeue.insert(st.equeue.end(), rgs.begin(), rgs.end());
        if (st.edges.empty()) {
            out.push_back(std::move(st));
            continue;
        }
        const Graph g = st.graph();
        if (validation_ok(validate_layout(g, st.layout(g), config.ell)))
            out.push_back(std::move(st));
    }
    return out;
}

GameOutcome verify_alice_wins(const Strategy& strategy, const GameConfig& config,
                              const std::vector<GameState>* initial) {
    GameOutcome out;
    out.tree.config = config;
    const std::vector<GameState> inits = initial ? *initial : initial_states(config);

    std::function<int(const GameState&)> expand = [&](const GameState& st) -> int {
        if (static_cast<long long>(out.tree.nodes.size()) >= config.caps.max_tree_nodes) {
            out.verdict = GameVerdict::CapExceeded;
            return -1;
        }
        const int idx = static_cast<int>(out.tree.nodes.size());
        out.tree.nodes.push_back(WinNode{});
        out.tree.nodes[idx].state = st;
        const std::optional<AliceMove> mv = strategy.choose(st);
        if (!mv) {
            out.verdict = GameVerdict::BobSurvives;
            out.counter = CounterLayout{st, "strategy conceded the position"};
            return -1;
        }
        out.tree.nodes[idx].move = *mv;
        const int addv = (config.paired() ? 2 : 1) * mv->m;
        if (st.vertex_count() + addv > config.caps.max_vertices ||
            st.round_count() + 1 > config.caps.max_rounds) {
            out.verdict = GameVerdict::CapExceeded;
            return -1;
        }
        std::vector<BobMove> cands = reply_candidates(st, *mv);
        std::vector<BobMove> legal;
        std::vector<GameState> nexts;
        std::vector<LeafRefutation> refuted;
        for (BobMove& bm : cands) {
            GameState t = apply_move(st, *mv, bm);
            const Graph g = t.graph();
            const ValidationResult res = validate_layout(g, t.layout(g), config.ell);
            if (validation_ok(res)) {
                legal.push_back(std::move(bm));
                nexts.push_back(std::move(t));
            } else {
                refuted.push_back(LeafRefutation{std::move(bm), res});
            }
        }
        if (legal.empty()) {
            out.tree.nodes[idx].refutations = std::move(refuted);
            return idx;
        }
        std::vector<int> kids;
        for (std::size_t i = 0; i < legal.size(); ++i) {
            const int cidx = expand(nexts[i]);
            if (cidx < 0) {
                out.tree.nodes[idx].replies = std::move(legal);
                out.tree.nodes[idx].children = std::move(kids);
                return -1;
            }
            kids.push_back(cidx);
        }
        out.tree.nodes[idx].replies = std::move(legal);
        out.tree.nodes[idx].children = std::move(kids);
        return idx;
    };

    for (const GameState& st : inits) {
        const int r = expand(st);
        out.nodes_expanded = static_cast<long long>(out.tree.nodes.size());
        if (r < 0) return out;
        out.tree.roots.push_back(r);
    }
    out.verdict = GameVerdict::AliceWins;
    out.nodes_expanded = static_cast<long long>(out.tree.nodes.size());
    return out;
}

}  // namespace queuelay
