#include "queuelay/strategies.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

namespace queuelay {

namespace {

std::vector<int> rank_table(const GameState& s) {
    std::vector<int> r(s.spine.size(), -1);
    for (int i = 0; i < static_cast<int>(s.spine.size()); ++i) r[s.spine[i]] = i;
    return r;
}

std::set<int> queue_set(const GameState& s, int v) {
    std::set<int> qs;
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        if (s.edges[i].u == v || s.edges[i].v == v) qs.insert(s.equeue[i]);
    return qs;
}

// ---------------------------------------------------------------------------
// Two-queue subgame. Once two adjacent vertices each carry both queues of a
// pair, every later edge among them and their descendants is stuck in that
// pair. States keep only ranks: vertices 0..n-1 in spine order, edges with
// queue 0 or 1. Alice picks an edge; a reply inserts the child at some rank
// right of it and colors the two new edges with {0,1} in one of two orders;
// replies creating a same-queue strict nesting are illegal. Alice wins when
// some move leaves no legal reply, or all replies are winnable.

struct AbsState {
    int n = 0;
    std::vector<std::array<int, 3>> edges;  // {lo, hi, queue}, sorted
};

std::vector<int> abs_key(const AbsState& a) {
    std::vector<int> k{a.n};
    for (const auto& e : a.edges) {
        k.push_back(e[0]);
        k.push_back(e[1]);
        k.push_back(e[2]);
    }
    return k;
}

bool strictly_nested(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return (a[0] < b[0] && b[1] < a[1]) || (b[0] < a[0] && a[1] < b[1]);
}

std::vector<AbsState> abs_replies(const AbsState& a, int ea, int eb) {
    std::vector<AbsState> out;
    const int lo = std::min(ea, eb), hi = std::max(ea, eb);
    for (int g = hi + 1; g <= a.n; ++g) {
        for (int sigma = 0; sigma < 2; ++sigma) {
            AbsState t;
            t.n = a.n + 1;
            for (const auto& e : a.edges)
                t.edges.push_back({e[0] >= g ? e[0] + 1 : e[0], e[1] >= g ? e[1] + 1 : e[1],
                                   e[2]});
            const std::array<int, 3> n1{lo, g, sigma};
            const std::array<int, 3> n2{hi, g, 1 - sigma};
            bool ok = true;
            for (const auto& e : t.edges) {
                if (e[2] == n1[2] && strictly_nested(e, n1)) ok = false;
                if (e[2] == n2[2] && strictly_nested(e, n2)) ok = false;
            }
            if (!ok) continue;
            t.edges.push_back(n1);
            t.edges.push_back(n2);
            std::sort(t.edges.begin(), t.edges.end());
            out.push_back(std::move(t));
        }
    }
    return out;
}

class AbsSolver {
public:
    bool win(const AbsState& a, int depth) {
        const std::vector<int> key = abs_key(a);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            if (it->second.won) return true;
            if (it->second.depth >= depth) return false;
        }
        if (depth == 0) return false;
        for (const auto& mv : a.edges) {
            bool all = true;
            for (const AbsState& r : abs_replies(a, mv[0], mv[1]))
                if (!win(r, depth - 1)) {
                    all = false;
                    break;
                }
            if (all) {
                memo_[key] = {true, depth};
                return true;
            }
        }
        memo_[key] = {false, depth};
        return false;
    }

    // First edge (canonical order) whose every reply is winnable in depth-1.
    std::optional<std::pair<int, int>> best(const AbsState& a, int depth) {
        for (const auto& mv : a.edges) {
            bool all = true;
            for (const AbsState& r : abs_replies(a, mv[0], mv[1]))
                if (!win(r, depth - 1)) {
                    all = false;
                    break;
                }
            if (all) return std::make_pair(mv[0], mv[1]);
        }
        return std::nullopt;
    }

private:
    struct Entry {
        bool won = false;
        int depth = 0;
    };
    std::map<std::vector<int>, Entry> memo_;
};

constexpr int kAbsDepthCap = 12;

// ---------------------------------------------------------------------------

struct WitnessStrategy final : Strategy {
    mutable AbsSolver solver;

    std::string name() const override { return "witness"; }

    std::optional<AliceMove> choose(const GameState& s) const override {
        if (s.config.k != 2 || s.config.paired()) return std::nullopt;
        if (s.round_count() == 0) {
            std::vector<int> init;
            for (int v = 0; v < s.vertex_count(); ++v)
                if (s.born[v] == 0) init.push_back(v);
            return AliceMove{init, 1};
        }

        // A reply "escapes" once a child edge reuses its parent clique's
        // queue: the other clique vertex and the child then both carry
        // exactly the two queues involved.
        int trig_round = -1, p = -1, q = -1, q_shared = -1, q_other = -1;
        for (int r = 0; r < s.round_count() && trig_round < 0; ++r) {
            const RoundRecord& rec = s.rounds[r];
            if (rec.clique.size() != 2 || rec.children.size() != 1) continue;
            const int parent_q = s.queue_of(rec.clique[0], rec.clique[1]);
            const int x = rec.children[0];
            for (int pass = 0; pass < 2 && trig_round < 0; ++pass) {
                const int ci = rec.clique[pass];
                const int cj = rec.clique[1 - pass];
                if (s.queue_of(ci, x) != parent_q) continue;
                const int qp = s.queue_of(cj, x);
                if (qp == parent_q) continue;
                const std::set<int> pair{parent_q, qp};
                if (queue_set(s, cj) != pair || queue_set(s, x) != pair) continue;
                trig_round = r;
                p = cj;
                q = x;
                q_shared = parent_q;
                q_other = qp;
            }
        }

        if (trig_round < 0) {
            // scripted line: child ids run 2,3,4,... so these cliques are
            // {v0, c1}, {v0, c2}, {c1, c2}, {c1, c4}
            static const std::array<std::pair<int, int>, 4> script{
                {{0, 2}, {0, 3}, {2, 3}, {2, 5}}};
            const int next = s.round_count() + 1;
            if (next < 2 || next > 5) return std::nullopt;
            const auto [a, b] = script[next - 2];
            if (s.queue_of(a, b) < 0) return std::nullopt;
            return AliceMove{{a, b}, 1};
        }

        // Confined set: the saturated pair plus everything added later.
        const std::vector<int> rk = rank_table(s);
        std::vector<int> confined{p, q};
        for (int v = 0; v < s.vertex_count(); ++v)
            if (s.born[v] > trig_round + 1) confined.push_back(v);
        std::sort(confined.begin(), confined.end(),
                  [&](int a, int b) { return rk[a] < rk[b]; });
        const std::set<int> pair{q_shared, q_other};
        for (int v : confined)
            if (queue_set(s, v) != pair) return std::nullopt;

        std::vector<int> pos(s.vertex_count(), -1);
        for (std::size_t i = 0; i < confined.size(); ++i) pos[confined[i]] = static_cast<int>(i);
        AbsState abs;
        abs.n = static_cast<int>(confined.size());
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            const int u = pos[s.edges[i].u], v = pos[s.edges[i].v];
            if (u < 0 || v < 0) continue;
            abs.edges.push_back({std::min(u, v), std::max(u, v),
                                 s.equeue[i] == q_other ? 0 : 1});
        }
        std::sort(abs.edges.begin(), abs.edges.end());

        for (int depth = 1; depth <= kAbsDepthCap; ++depth) {
            if (!solver.win(abs, depth)) continue;
            const auto mv = solver.best(abs, depth);
            if (!mv) continue;
            std::vector<int> clique{confined[mv->first], confined[mv->second]};
            std::sort(clique.begin(), clique.end());
            return AliceMove{clique, 1};
        }
        return std::nullopt;
    }
};

struct PinningChainStrategy final : Strategy {
    std::string name() const override { return "pinning"; }

    std::optional<AliceMove> choose(const GameState& s) const override {
        if (!s.config.paired()) return std::nullopt;
        if (s.round_count() == 0) {
            std::vector<int> init;
            for (int v = 0; v < s.vertex_count(); ++v)
                if (s.born[v] == 0 && s.side[v] == 0) init.push_back(v);
            return AliceMove{init, 1};
        }
        const RoundRecord& prev = s.rounds.back();
        if (prev.children.size() != 1) return std::nullopt;
        const int x = prev.children[0];
        const int v = s.spine[0];
        const std::vector<int> rk = rank_table(s);
        int drop = -1;
        for (int c : prev.clique)
            if (c != v && (drop < 0 || rk[c] < rk[drop])) drop = c;
        if (drop < 0) return std::nullopt;
        std::vector<int> next;
        for (int c : prev.clique)
            if (c != drop) next.push_back(c);
        next.push_back(x);
        std::sort(next.begin(), next.end());
        return AliceMove{next, 1};
    }
};

}  // namespace

std::unique_ptr<Strategy> witness_strategy() { return std::make_unique<WitnessStrategy>(); }

std::unique_ptr<Strategy> pinning_chain_strategy() {
    return std::make_unique<PinningChainStrategy>();
}

}  // namespace queuelay
