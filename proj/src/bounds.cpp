#include "queuelay/bounds.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace queuelay {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Dinic max-flow on a small explicit network.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(int from, int to, long long cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            long long f;
            while ((f = dfs(s, t, kInf)) > 0) flow += f;
        }
        return flow;
    }

    // after run(): nodes reachable from s in the residual network
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    q.push(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to, next;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] == -1) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] != -1;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t) return limit;
        for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
                long long got = dfs(arc.to, t, std::min(limit, arc.cap));
                if (got > 0) {
                    arc.cap -= got;
                    arcs_[a ^ 1].cap += got;
                    return got;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

// Maximize sum of edge_weight over edges with both endpoints chosen, minus
// sum of vertex_cost over chosen vertices (the empty set scores 0). Closure
// network: source -> edge node (weight), edge node -> endpoints (inf),
// vertex -> sink (cost). Returns the achieved value and a maximizing set.
struct ClosureResult {
    long long value = 0;
    std::vector<int> chosen;
};

ClosureResult max_weight_closure(const Graph& g, long long edge_weight,
                                 const std::vector<long long>& vertex_cost) {
    const int n = g.vertex_count(), m = g.edge_count();
    const int s = n + m, t = n + m + 1;
    MaxFlow mf(n + m + 2);
    long long total = 0;
    for (int i = 0; i < m; ++i) {
        mf.add_edge(s, n + i, edge_weight);
        mf.add_edge(n + i, g.edges()[i].u, kInf);
        mf.add_edge(n + i, g.edges()[i].v, kInf);
        total += edge_weight;
    }
    for (int v = 0; v < n; ++v) mf.add_edge(v, t, vertex_cost[v]);
    long long cut = mf.run(s, t);
    std::vector<char> side = mf.source_side(s);
    ClosureResult res;
    res.value = total - cut;
    for (int v = 0; v < n; ++v)
        if (side[v]) res.chosen.push_back(v);
    return res;
}

long long induced_edge_count(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : verts) in[v] = 1;
    long long cnt = 0;
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) ++cnt;
    return cnt;
}

// Exact max of |E(S)|/|S| over nonempty S, with a witness. Iterate: test the
// current candidate ratio p/q by maximizing q*e(S) - p*|S|; a positive value
// yields a strictly denser S, value zero certifies optimality. Every
// candidate is the ratio of an actual subgraph, so the chain is finite.
std::pair<Rational, std::vector<int>> max_density(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw BoundsError("density of empty graph");
    if (g.edge_count() == 0) {
        return {Rational(0, 1), {0}};
    }
    std::vector<int> best(n);
    for (int v = 0; v < n; ++v) best[v] = v;
    Rational ratio(g.edge_count(), n);
    for (;;) {
        std::vector<long long> cost(n, ratio.num);
        ClosureResult r = max_weight_closure(g, ratio.den, cost);
        if (r.value <= 0 || r.chosen.empty()) return {ratio, best};
        long long e = induced_edge_count(g, r.chosen);
        Rational next(e, static_cast<long long>(r.chosen.size()));
        if (!(ratio < next))
            throw BoundsError("density search failed to make progress");
        ratio = next;
        best = r.chosen;
    }
}

}  // namespace

Rational mad(const Graph& g) {
    if (g.vertex_count() == 0) throw BoundsError("mad of empty graph");
    auto [ratio, verts] = max_density(g);
    return ratio * Rational(2, 1);
}

std::vector<int> densest_subgraph(const Graph& g) {
    if (g.vertex_count() == 0) throw BoundsError("densest subgraph of empty graph");
    return max_density(g).second;
}

int nash_williams_arboricity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw BoundsError("arboricity needs at least 2 vertices");
    const int m = g.edge_count();
    if (m == 0) return 0;

    // arb > k  iff  some S (|S| >= 2) has e(S) > k(|S|-1)  iff  for some v,
    // max over S containing v of e(S) - k(|S|-1) is positive. Waiving v's
    // cost in the closure (cost 0) computes exactly that max.
    auto exceeds = [&](int k) {
        for (int v = 0; v < n; ++v) {
            std::vector<long long> cost(n, k);
            cost[v] = 0;
            ClosureResult r = max_weight_closure(g, 1, cost);
            if (r.value > 0) return true;
        }
        return false;
    };

    int lo = 1, hi = std::max(1, degeneracy(g));  // arboricity <= degeneracy
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (exceeds(mid))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

BoundsReport density_bounds(const Graph& g) {
    if (g.vertex_count() == 0) throw BoundsError("bounds of empty graph");
    BoundsReport rep;
    rep.mad = mad(g);
    rep.degeneracy = degeneracy(g);
    rep.arboricity_nw = g.vertex_count() >= 2 ? nash_williams_arboricity(g) : 0;
    rep.lqn_lower = rep.mad / Rational(4, 1);
    rep.lqn_upper = rep.mad / Rational(2, 1) + Rational(2, 1);
    return rep;
}

std::vector<int> queue_edge_bound_check(const Graph& g, const QueueLayout& L) {
    if (!validation_ok(validate_layout(g, L)))
        throw BoundsError("queue edge bound requires a valid layout");
    std::map<int, std::pair<std::set<int>, int>> per_queue;  // vertices, edges
    for (int i = 0; i < g.edge_count(); ++i) {
        auto& [verts, cnt] = per_queue[L.queue_of[i]];
        verts.insert(g.edges()[i].u);
        verts.insert(g.edges()[i].v);
        ++cnt;
    }
    std::vector<int> violators;
    for (const auto& [q, data] : per_queue) {
        long long vq = static_cast<long long>(data.first.size());
        if (vq >= 2 && data.second > 2 * vq - 3) violators.push_back(q);
    }
    return violators;
}

}  // namespace queuelay
