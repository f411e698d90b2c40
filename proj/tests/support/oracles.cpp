#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace queuelay_tests {

using queuelay::AliceMove;
using queuelay::BobMove;
using queuelay::Edge;
using queuelay::GameState;
using queuelay::Graph;
using queuelay::LinearOrder;
using queuelay::QueueLayout;
using queuelay::Rational;

namespace {

int popcount_edges(const Graph& g, unsigned mask) {
    int cnt = 0;
    for (const Edge& e : g.edges())
        if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++cnt;
    return cnt;
}

}  // namespace

Rational brute_mad(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 20) throw std::runtime_error("brute_mad: bad size");
    Rational best(0, 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int verts = __builtin_popcount(mask);
        Rational r(2LL * popcount_edges(g, mask), verts);
        if (best < r) best = r;
    }
    return best;
}

int brute_arboricity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || n > 20) throw std::runtime_error("brute_arboricity: bad size");
    long long best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int verts = __builtin_popcount(mask);
        if (verts < 2) continue;
        long long e = popcount_edges(g, mask);
        best = std::max(best, (e + verts - 2) / (verts - 1));  // ceil(e/(verts-1))
    }
    return static_cast<int>(best);
}

int naive_max_rainbow(const Graph& g, const LinearOrder& ord) {
    const int m = g.edge_count();
    // longest path in the DAG where a -> b means a strictly encloses b
    std::vector<int> depth(m, 1);
    // process in decreasing span length so enclosers are finished first
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    auto len = [&](int i) {
        const Edge& e = g.edges()[i];
        int a = ord.rank(e.u), b = ord.rank(e.v);
        return a < b ? b - a : a - b;
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return len(a) > len(b); });
    int best = m > 0 ? 1 : 0;
    for (int i : idx) {
        for (int j : idx) {
            if (j == i) continue;
            if (len(j) <= len(i)) continue;
            if (queuelay::nests(g.edges()[j], g.edges()[i], ord))
                depth[i] = std::max(depth[i], depth[j] + 1);
        }
        best = std::max(best, depth[i]);
    }
    return best;
}

bool naive_layout_valid(const Graph& g, const QueueLayout& L, std::optional<int> ell) {
    if (L.order.size() != g.vertex_count()) return false;
    if (static_cast<int>(L.queue_of.size()) != g.edge_count()) return false;
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j)
            if (L.queue_of[i] == L.queue_of[j] &&
                queuelay::nests(g.edges()[i], g.edges()[j], L.order))
                return false;
    if (ell) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::set<int> qs;
            for (int w : g.neighbors(v)) qs.insert(L.queue_of[g.edge_index(v, w)]);
            if (static_cast<int>(qs.size()) > *ell) return false;
        }
    }
    return true;
}

namespace {

// Independent successor bookkeeping (kept separate from the engine's
// apply_move on purpose).
GameState oracle_apply(const GameState& s, const AliceMove& mv, const BobMove& bm) {
    GameState t = s;
    t.spine = bm.spine_after;
    const int n0 = s.vertex_count();
    const int m = mv.m;
    const bool paired = s.config.paired();
    const int round_no = static_cast<int>(s.rounds.size()) + 1;
    std::vector<int> ccopy;
    for (int v : mv.clique)
        if (paired) ccopy.push_back(s.copy_of[v]);
    std::sort(ccopy.begin(), ccopy.end());
    queuelay::RoundRecord rec;
    rec.clique = mv.clique;
    rec.clique_copy = ccopy;
    int slot = 0;
    for (int i = 0; i < m; ++i) {
        t.side.push_back(0);
        t.copy_of.push_back(paired ? n0 + m + i : -1);
        t.born.push_back(round_no);
        t.parent.push_back(mv.clique);
        rec.children.push_back(n0 + i);
        for (int c : mv.clique) {
            t.edges.push_back(Edge(c, n0 + i));
            t.equeue.push_back(bm.queues[slot++]);
        }
    }
    if (paired)
        for (int i = 0; i < m; ++i) {
            t.side.push_back(1);
            t.copy_of.push_back(n0 + i);
            t.born.push_back(round_no);
            t.parent.push_back(ccopy);
            rec.children_copy.push_back(n0 + m + i);
            for (int c : ccopy) {
                t.edges.push_back(Edge(c, n0 + m + i));
                t.equeue.push_back(bm.queues[slot++]);
            }
        }
    t.rounds.push_back(rec);
    return t;
}

std::vector<int> oracle_ranks(const GameState& t) {
    std::vector<int> r(t.spine.size(), -1);
    for (int i = 0; i < static_cast<int>(t.spine.size()); ++i) r[t.spine[i]] = i;
    return r;
}

int oracle_queue(const GameState& t, int u, int v) {
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        if ((t.edges[i].u == u && t.edges[i].v == v) ||
            (t.edges[i].u == v && t.edges[i].v == u))
            return t.equeue[i];
    return -1;
}

bool oracle_adjacent(const GameState& t, int u, int v) { return oracle_queue(t, u, v) >= 0; }

// Direct quadratic restatements of the reply conditions.
bool oracle_condition(const GameState& t, int c) {
    if (c > t.config.level) return true;
    const std::vector<int> rk = oracle_ranks(t);
    const int n = t.vertex_count();
    if (c == 2) {
        if (t.rounds.empty()) return true;
        for (int pass = 0; pass < 2; ++pass) {
            const auto& kids =
                pass == 0 ? t.rounds[0].children : t.rounds[0].children_copy;
            for (int x : kids)
                for (int v = 0; v < n; ++v)
                    if (t.born[v] == 0 && t.side[v] == pass && rk[x] < rk[v]) return false;
        }
        return true;
    }
    if (c == 3) {
        for (std::size_t ri = 0; ri < t.rounds.size(); ++ri)
            for (int pass = 0; pass < 2; ++pass) {
                const auto& kids =
                    pass == 0 ? t.rounds[ri].children : t.rounds[ri].children_copy;
                for (int x : kids)
                    for (int y : kids)
                        for (int v = 0; v < n; ++v)
                            if (t.born[v] <= static_cast<int>(ri) && t.side[v] == pass &&
                                rk[x] < rk[v] && rk[v] < rk[y])
                                return false;
            }
        return true;
    }
    if (c == 4) {
        for (const auto& rec : t.rounds)
            for (int pass = 0; pass < 2; ++pass) {
                const auto& kids = pass == 0 ? rec.children : rec.children_copy;
                const auto& cl = pass == 0 ? rec.clique : rec.clique_copy;
                for (int cv : cl)
                    for (int x : kids)
                        for (int y : kids)
                            if (oracle_queue(t, cv, x) != oracle_queue(t, cv, y)) return false;
            }
        return true;
    }
    if (c == 5) {
        for (const auto& rec : t.rounds)
            for (int pass = 0; pass < 2; ++pass) {
                const auto& kids = pass == 0 ? rec.children : rec.children_copy;
                const auto& cl = pass == 0 ? rec.clique : rec.clique_copy;
                for (int x : kids) {
                    for (int cv : cl)
                        if (rk[x] < rk[cv]) return false;
                    for (int a : cl)
                        for (int b : cl)
                            if (a != b && oracle_queue(t, a, x) == oracle_queue(t, b, x))
                                return false;
                }
            }
        return true;
    }
    if (c == 6) {
        if (!t.config.paired()) return true;
        // mirrored cliques alternate: brute-force every left k-clique
        const int k = t.config.k;
        std::vector<int> lefts;
        for (int v = 0; v < n; ++v)
            if (t.side[v] == 0) lefts.push_back(v);
        std::vector<int> pick;
        std::vector<std::vector<int>> found;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (static_cast<int>(pick.size()) == k) {
                for (std::size_t a = 0; a < pick.size(); ++a)
                    for (std::size_t b = a + 1; b < pick.size(); ++b)
                        if (!oracle_adjacent(t, pick[a], pick[b])) return;
                found.push_back(pick);
                return;
            }
            if (i == lefts.size()) return;
            pick.push_back(lefts[i]);
            rec(i + 1);
            pick.pop_back();
            rec(i + 1);
        };
        rec(0);
        for (auto C : found) {
            std::sort(C.begin(), C.end(), [&](int a, int b) { return rk[a] < rk[b]; });
            int prev = -1;
            for (int v : C) {
                const int w = t.copy_of[v];
                if (w < 0 || !(prev < rk[v] && rk[v] < rk[w])) return false;
                prev = rk[w];
            }
        }
        for (const auto& recd : t.rounds) {
            for (int x : recd.children) {
                const int y = t.copy_of[x];
                if (y < 0 || rk[y] < rk[x]) return false;
                for (int cv : recd.clique)
                    if (rk[x] < rk[cv] || rk[y] < rk[cv]) return false;
                for (int cv : recd.clique_copy)
                    if (rk[x] < rk[cv] || rk[y] < rk[cv]) return false;
            }
        }
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            const int u2 = t.copy_of[t.edges[i].u], v2 = t.copy_of[t.edges[i].v];
            if (u2 < 0 || v2 < 0) return false;
            if (oracle_queue(t, u2, v2) != t.equeue[i]) return false;
        }
        return true;
    }
    if (c == 7) {
        if (!t.config.paired()) return true;
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            const int a = t.edges[i].u, b = t.edges[i].v;
            if (t.side[a] != 0) continue;
            const int a2 = t.copy_of[a], b2 = t.copy_of[b];
            if (a2 < 0 || b2 < 0) return false;
            const int reach =
                std::max(std::max(rk[a], rk[b]), std::max(rk[a2], rk[b2]));
            const int lo = rk[a] < rk[b] ? a : b;
            for (int x = 0; x < n; ++x) {
                if (t.born[x] == 0 || rk[x] <= reach) continue;
                bool child = false;
                for (int p : t.parent[x])
                    if (p == lo) child = true;
                if (child && oracle_queue(t, lo, x) == t.equeue[i]) return false;
            }
        }
        return true;
    }
    return true;
}

void merge_spines_rec(const std::vector<int>& old_sp, std::size_t oi, int li, int ri,
                      int m_left, int m_right, int n0, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (oi == old_sp.size() && li == m_left && ri == m_right) {
        out.push_back(cur);
        return;
    }
    if (oi < old_sp.size()) {
        cur.push_back(old_sp[oi]);
        merge_spines_rec(old_sp, oi + 1, li, ri, m_left, m_right, n0, cur, out);
        cur.pop_back();
    }
    if (li < m_left) {
        cur.push_back(n0 + li);
        merge_spines_rec(old_sp, oi, li + 1, ri, m_left, m_right, n0, cur, out);
        cur.pop_back();
    }
    if (ri < m_right) {
        cur.push_back(n0 + m_left + ri);
        merge_spines_rec(old_sp, oi, li, ri + 1, m_left, m_right, n0, cur, out);
        cur.pop_back();
    }
}

void assignments_rec(int slots, int used, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == slots) {
        out.push_back(cur);
        return;
    }
    for (int q = 0; q <= used; ++q) {
        cur.push_back(q);
        assignments_rec(slots, q == used ? used + 1 : used, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<BobMove> naive_bob_replies(const GameState& s, const AliceMove& mv) {
    const bool paired = s.config.paired();
    const int m = mv.m;
    const int fresh = (paired ? 2 : 1) * m;
    const int n0 = s.vertex_count();

    std::vector<std::vector<int>> spines;
    std::vector<int> cur;
    merge_spines_rec(s.spine, 0, 0, 0, m, paired ? m : 0, n0, cur, spines);

    std::vector<std::vector<int>> assigns;
    std::vector<int> acur;
    assignments_rec(fresh * s.config.k, [&] {
        int q = 0;
        for (int id : s.equeue) q = std::max(q, id + 1);
        return q;
    }(), acur, assigns);

    std::vector<BobMove> keep;
    for (const auto& sp : spines)
        for (const auto& qs : assigns) {
            BobMove bm{sp, qs};
            const GameState t = oracle_apply(s, mv, bm);
            bool ok = true;
            for (int c = 2; c <= s.config.level && ok; ++c) ok = oracle_condition(t, c);
            if (ok) keep.push_back(bm);
        }
    std::sort(keep.begin(), keep.end(), [](const BobMove& a, const BobMove& b) {
        if (a.spine_after != b.spine_after) return a.spine_after < b.spine_after;
        return a.queues < b.queues;
    });
    return keep;
}

std::vector<BobMove> naive_legal_bob_replies(const GameState& s, const AliceMove& mv) {
    std::vector<BobMove> out;
    for (const BobMove& bm : naive_bob_replies(s, mv)) {
        const GameState t = oracle_apply(s, mv, bm);
        const Graph g = t.graph();
        if (naive_layout_valid(g, t.layout(g), s.config.ell)) out.push_back(bm);
    }
    return out;
}

}  // namespace queuelay_tests
