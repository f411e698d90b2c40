#include "queuelay/solver.hpp"

#include <algorithm>
#include <chrono>

#include "queuelay/common.hpp"

namespace queuelay {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Item {
    int lo, hi, idx;
};

std::vector<Item> sorted_items(const Graph& g, const LinearOrder& ord) {
    std::vector<Item> items(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        int a = ord.rank(e.u), b = ord.rank(e.v);
        if (a > b) std::swap(a, b);
        items[i] = {a, b, i};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    return items;
}

// Shared bookkeeping for budgeted searches.
struct Guard {
    SolveStats* stats;
    const SolveBudget* budget;
    Clock::time_point t0;
    bool out = false;

    bool tick() {
        ++stats->nodes;
        if (!budget) return true;
        if (stats->nodes > budget->max_nodes) {
            out = true;
            return false;
        }
        if (budget->max_millis > 0 && (stats->nodes & 0xfff) == 0 &&
            ms_since(t0) > budget->max_millis) {
            out = true;
            return false;
        }
        return true;
    }
};

enum class SearchOut { found, unsat, budget };

// Backtracking assignment of edges (in (lo, hi) order) to queues so that no
// queue holds a nesting pair and no vertex meets more than ell queues. Only
// "existing member encloses the new edge" can occur: later edges never
// enclose earlier ones under this processing order, and equal left ranks
// mean a shared endpoint.
class LocalitySearch {
public:
    LocalitySearch(const Graph& g, const LinearOrder& ord, int ell, Guard& guard)
        : g_(g),
          ord_(ord),
          ell_(ell),
          guard_(guard),
          items_(sorted_items(g, ord)),
          q_of_(g.edge_count(), -1),
          vqueues_(g.vertex_count()) {}

    SearchOut run(QueueLayout* layout_out) {
        SearchOut r = dfs(0);
        if (r == SearchOut::found && layout_out) {
            QueueLayout L;
            L.order = ord_;
            L.queue_of.resize(g_.edge_count());
            for (int p = 0; p < g_.edge_count(); ++p)
                L.queue_of[items_[p].idx] = q_of_[p];
            *layout_out = canonical_queue_relabel(g_, L);
        }
        return r;
    }

private:
    bool queue_ok(int q, const Item& it) const {
        for (int p : members_[q]) {
            if (items_[p].lo < it.lo && items_[p].hi > it.hi) return false;
        }
        return true;
    }

    // endpoint already meets q, or has room for one more queue
    bool vertex_ok(int v, int q) const {
        const auto& qs = vqueues_[v];
        for (int x : qs)
            if (x == q) return true;
        return static_cast<int>(qs.size()) < ell_;
    }

    // returns true if q was newly added at v (caller must undo)
    bool vertex_add(int v, int q) {
        for (int x : vqueues_[v])
            if (x == q) return false;
        vqueues_[v].push_back(q);
        return true;
    }

    SearchOut dfs(int p) {
        if (p == g_.edge_count()) return SearchOut::found;
        const Item& it = items_[p];
        const Edge& e = g_.edges()[it.idx];
        const int used = static_cast<int>(members_.size());
        // existing queues, then one canonical fresh queue
        for (int q = 0; q <= used; ++q) {
            if (!guard_.tick()) return SearchOut::budget;
            if (q < used && !queue_ok(q, it)) continue;
            if (!vertex_ok(e.u, q) || !vertex_ok(e.v, q)) continue;
            if (q == used) members_.emplace_back();
            members_[q].push_back(p);
            q_of_[p] = q;
            bool added_u = vertex_add(e.u, q);
            bool added_v = vertex_add(e.v, q);

            SearchOut r = dfs(p + 1);
            if (r != SearchOut::unsat) return r;

            if (added_v) vqueues_[e.v].pop_back();
            if (added_u) vqueues_[e.u].pop_back();
            q_of_[p] = -1;
            members_[q].pop_back();
            if (q == used) members_.pop_back();
        }
        return SearchOut::unsat;
    }

    const Graph& g_;
    LinearOrder ord_;  // by value: callers may pass temporaries
    const int ell_;
    Guard& guard_;
    std::vector<Item> items_;
    std::vector<int> q_of_;
    std::vector<std::vector<int>> members_;   // per queue: item positions
    std::vector<std::vector<int>> vqueues_;   // per vertex: distinct queues
};

// Enumerates permutations of 0..n-1 in lexicographic order, skipping
// reversals (first element kept below last); both nesting and locality are
// reversal-invariant. visit returns false to stop the enumeration.
template <typename Visit>
bool for_each_order(int n, Visit visit) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    do {
        if (n >= 2 && seq.front() > seq.back()) continue;
        if (!visit(seq)) return false;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return true;
}

QueueLayout edge_per_queue_layout(const Graph& g, const LinearOrder& ord) {
    QueueLayout L;
    L.order = ord;
    L.queue_of.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) L.queue_of[i] = i;
    return canonical_queue_relabel(g, L);
}

}  // namespace

SolveResult min_queues_for_order(const Graph& g, const LinearOrder& ord) {
    Clock::time_point t0 = Clock::now();
    SolveResult res;
    res.witness.order = ord;
    res.witness.queue_of.assign(g.edge_count(), 0);
    if (g.edge_count() == 0) {
        res.stats.millis = ms_since(t0);
        return res;
    }
    std::vector<Item> items = sorted_items(g, ord);

    // depth = longest chain of strictly enclosing edges ending here; patience
    // over right ranks (an enclosing predecessor has smaller lo, larger hi).
    std::vector<int> tails;  // negated hi per depth, strictly increasing
    int max_depth = 0;
    for (const Item& it : items) {
        ++res.stats.nodes;
        int key = -it.hi;
        auto pos = std::lower_bound(tails.begin(), tails.end(), key);
        int d = static_cast<int>(pos - tails.begin());
        if (pos == tails.end())
            tails.push_back(key);
        else
            *pos = key;
        res.witness.queue_of[it.idx] = d;
        max_depth = std::max(max_depth, d + 1);
    }
    res.value = max_depth;
    res.witness = canonical_queue_relabel(g, res.witness);
    res.stats.millis = ms_since(t0);
    return res;
}

std::optional<QueueLayout> min_locality_for_order(const Graph& g, const LinearOrder& ord,
                                                  int ell, SolveStats* stats,
                                                  const SolveBudget* budget) {
    if (ell < 1) throw LayoutError("locality bound must be >= 1");
    SolveStats local;
    Guard guard{stats ? stats : &local, budget, Clock::now()};
    if (g.edge_count() == 0) {
        QueueLayout L;
        L.order = ord;
        return L;
    }
    LocalitySearch search(g, ord, ell, guard);
    QueueLayout L;
    SearchOut r = search.run(&L);
    if (r == SearchOut::budget)
        throw BudgetError("locality search budget exhausted");
    if (r == SearchOut::unsat) return std::nullopt;
    return L;
}

SolveResult exact_lqn(const Graph& g, const SolveBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.vertex_cap)
        throw BudgetError("graph has " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(budget.vertex_cap));
    Clock::time_point t0 = Clock::now();
    SolveResult res;
    if (g.edge_count() == 0) {
        res.witness.order = LinearOrder::identity(n);
        res.stats.millis = ms_since(t0);
        return res;
    }

    // incumbent upper bound: depth layering vs. one queue per edge, both on
    // the identity order
    LinearOrder ident = LinearOrder::identity(n);
    QueueLayout best_layout = min_queues_for_order(g, ident).witness;
    int ub = layout_locality(g, best_layout);
    {
        QueueLayout per_edge = edge_per_queue_layout(g, ident);
        int loc = layout_locality(g, per_edge);
        if (loc < ub) {
            ub = loc;
            best_layout = per_edge;
        }
    }

    Guard guard{&res.stats, &budget, t0};
    for (int ell = 1; ell < ub; ++ell) {
        QueueLayout found;
        bool have = false;
        bool complete = for_each_order(n, [&](const std::vector<int>& seq) {
            if (!guard.tick()) return false;
            LocalitySearch search(g, LinearOrder::from_sequence(seq), ell, guard);
            SearchOut r = search.run(&found);
            if (r == SearchOut::found) {
                have = true;
                return false;
            }
            return r != SearchOut::budget;
        });
        if (have) {
            res.value = ell;
            res.witness = found;
            res.exact = true;
            res.stats.millis = ms_since(t0);
            return res;
        }
        if (!complete && guard.out) {
            res.value = ub;
            res.witness = best_layout;
            res.exact = false;
            res.stats.millis = ms_since(t0);
            return res;
        }
    }
    // every ell < ub is unsatisfiable, so the incumbent is optimal
    res.value = ub;
    res.witness = best_layout;
    res.exact = true;
    res.stats.millis = ms_since(t0);
    return res;
}

SolveResult exact_qn(const Graph& g, const SolveBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.vertex_cap)
        throw BudgetError("graph has " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(budget.vertex_cap));
    Clock::time_point t0 = Clock::now();
    SolveResult res;
    if (g.edge_count() == 0) {
        res.witness.order = LinearOrder::identity(n);
        res.stats.millis = ms_since(t0);
        return res;
    }

    Guard guard{&res.stats, &budget, t0};
    int best = g.edge_count() + 1;
    LinearOrder best_order = LinearOrder::identity(n);
    bool complete = for_each_order(n, [&](const std::vector<int>& seq) {
        if (!guard.tick()) return false;
        LinearOrder ord = LinearOrder::from_sequence(seq);
        RainbowResult r = max_rainbow(g, ord);
        if (r.size < best) {
            best = r.size;
            best_order = ord;
        }
        return true;
    });
    res.value = best;
    res.witness = min_queues_for_order(g, best_order).witness;
    res.exact = complete;
    res.stats.millis = ms_since(t0);
    return res;
}

}  // namespace queuelay
