#include "queuelay/layout.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "queuelay/common.hpp"

namespace queuelay {

LinearOrder LinearOrder::identity(int n) {
    if (n < 0) throw LayoutError("order size must be non-negative");
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::from_sequence(std::vector<int> seq) {
    LinearOrder ord;
    const int n = static_cast<int>(seq.size());
    ord.rank_.assign(n, -1);
    for (int r = 0; r < n; ++r) {
        int v = seq[r];
        if (v < 0 || v >= n)
            throw LayoutError("order mentions vertex " + std::to_string(v) +
                              " outside [0, " + std::to_string(n) + ")");
        if (ord.rank_[v] != -1)
            throw LayoutError("order mentions vertex " + std::to_string(v) + " twice");
        ord.rank_[v] = r;
    }
    ord.seq_ = std::move(seq);
    return ord;
}

int LinearOrder::rank(int v) const {
    if (v < 0 || v >= size())
        throw LayoutError("rank of vertex " + std::to_string(v) +
                          " undefined in order of size " + std::to_string(size()));
    return rank_[v];
}

int LinearOrder::vertex_at(int r) const {
    if (r < 0 || r >= size())
        throw LayoutError("no vertex at rank " + std::to_string(r));
    return seq_[r];
}

LinearOrder LinearOrder::reversed() const {
    std::vector<int> seq(seq_.rbegin(), seq_.rend());
    return from_sequence(std::move(seq));
}

int QueueLayout::queue_count() const {
    std::set<int> qs(queue_of.begin(), queue_of.end());
    return static_cast<int>(qs.size());
}

namespace {

// Edge as an ordered rank interval.
struct RankSpan {
    int lo, hi;
};

RankSpan rank_span(const Edge& e, const LinearOrder& ord) {
    int a = ord.rank(e.u), b = ord.rank(e.v);
    if (a > b) std::swap(a, b);
    return {a, b};
}

}  // namespace

bool nests(const Edge& a, const Edge& b, const LinearOrder& ord) {
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    RankSpan ra = rank_span(a, ord), rb = rank_span(b, ord);
    return (ra.lo < rb.lo && rb.hi < ra.hi) || (rb.lo < ra.lo && ra.hi < rb.hi);
}

bool crosses(const Edge& a, const Edge& b, const LinearOrder& ord) {
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    RankSpan ra = rank_span(a, ord), rb = rank_span(b, ord);
    return (ra.lo < rb.lo && rb.lo < ra.hi && ra.hi < rb.hi) ||
           (rb.lo < ra.lo && ra.lo < rb.hi && rb.hi < ra.hi);
}

std::pair<int, int> span(const std::vector<int>& vertices, const LinearOrder& ord) {
    if (vertices.empty()) throw LayoutError("span of empty vertex set");
    int lo = ord.rank(vertices[0]), hi = lo;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        int r = ord.rank(vertices[i]);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

bool below(int v, const std::vector<int>& vertices, const LinearOrder& ord) {
    auto [lo, hi] = span(vertices, ord);
    int r = ord.rank(v);
    if (r <= lo || r >= hi) return false;
    for (int w : vertices)
        if (w == v) return false;
    return true;
}

bool outside(int v, const std::vector<int>& vertices, const LinearOrder& ord) {
    auto [lo, hi] = span(vertices, ord);
    int r = ord.rank(v);
    return r < lo || r > hi;
}

std::string describe(const ValidationResult& r) {
    if (std::holds_alternative<ValidationOk>(r)) return "ok";
    if (const auto* rv = std::get_if<RainbowViolation>(&r)) {
        std::ostringstream os;
        os << "edges {" << rv->a.u << "," << rv->a.v << "} and {" << rv->b.u << ","
           << rv->b.v << "} nest in queue " << rv->queue;
        return os.str();
    }
    const auto& lv = std::get<LocalityViolation>(r);
    std::ostringstream os;
    os << "vertex " << lv.vertex << " touches " << lv.queues.size() << " queues:";
    for (int q : lv.queues) os << ' ' << q;
    return os.str();
}

ValidationResult validate_layout(const Graph& g, const QueueLayout& L,
                                 std::optional<int> ell) {
    if (L.order.size() != g.vertex_count())
        throw CoverageError("layout order covers " + std::to_string(L.order.size()) +
                            " vertices, graph has " + std::to_string(g.vertex_count()));
    if (static_cast<int>(L.queue_of.size()) != g.edge_count())
        throw CoverageError("layout assigns " + std::to_string(L.queue_of.size()) +
                            " edges, graph has " + std::to_string(g.edge_count()));

    // Per queue: nesting-freedom means that when edges are scanned in
    // (left rank asc, right rank asc) order, right ranks never strictly drop.
    struct Item {
        int lo, hi, idx;
    };
    std::map<int, std::vector<Item>> per_queue;
    for (int i = 0; i < g.edge_count(); ++i) {
        RankSpan rs = rank_span(g.edges()[i], L.order);
        per_queue[L.queue_of[i]].push_back({rs.lo, rs.hi, i});
    }
    for (auto& [q, items] : per_queue) {
        std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            if (a.lo != b.lo) return a.lo < b.lo;
            return a.hi < b.hi;
        });
        // max right rank seen among edges with strictly smaller left rank
        int best_hi = -1, best_idx = -1;
        std::size_t i = 0;
        while (i < items.size()) {
            std::size_t j = i;
            while (j < items.size() && items[j].lo == items[i].lo) ++j;
            for (std::size_t t = i; t < j; ++t) {
                if (best_hi > items[t].hi) {
                    // the recorded edge strictly contains this one
                    return RainbowViolation{g.edges()[best_idx], g.edges()[items[t].idx], q};
                }
            }
            for (std::size_t t = i; t < j; ++t) {
                if (items[t].hi > best_hi) {
                    best_hi = items[t].hi;
                    best_idx = items[t].idx;
                }
            }
            i = j;
        }
    }

    if (ell) {
        if (*ell < 0) throw LayoutError("locality bound must be non-negative");
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::set<int> qs;
            for (int w : g.neighbors(v)) qs.insert(L.queue_of[g.edge_index(v, w)]);
            if (static_cast<int>(qs.size()) > *ell)
                return LocalityViolation{v, std::vector<int>(qs.begin(), qs.end())};
        }
    }
    return ValidationOk{};
}

int locality(const Graph& g, const QueueLayout& L, int v) {
    g.check_vertex(v);
    std::set<int> qs;
    for (int w : g.neighbors(v)) qs.insert(L.queue_of[g.edge_index(v, w)]);
    return static_cast<int>(qs.size());
}

int layout_locality(const Graph& g, const QueueLayout& L) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, locality(g, L, v));
    return best;
}

RainbowResult max_rainbow(const Graph& g, const LinearOrder& ord) {
    const int m = g.edge_count();
    if (m == 0) return {};

    struct Item {
        int lo, hi, idx;
    };
    std::vector<Item> items(m);
    for (int i = 0; i < m; ++i) {
        RankSpan rs = rank_span(g.edges()[i], ord);
        items[i] = {rs.lo, rs.hi, i};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    // Longest strictly decreasing subsequence of hi. Edges sharing lo appear
    // with ascending hi, so no two of them can both be picked — exactly
    // matching the "no shared endpoint" requirement on that side; a shared
    // right endpoint would mean equal hi, also never strictly decreasing.
    // tails[d] = largest hi value ending a decreasing chain of length d+1
    // (tails is itself decreasing... actually increasing in -hi). Use
    // binary search on negated values.
    std::vector<int> tails;       // negated hi, strictly increasing
    std::vector<int> tail_item;   // item index achieving tails[d]
    std::vector<int> parent(m, -1);
    std::vector<int> depth_of(m, 0);
    for (int t = 0; t < m; ++t) {
        int key = -items[t].hi;
        auto it = std::lower_bound(tails.begin(), tails.end(), key);
        int d = static_cast<int>(it - tails.begin());
        if (it == tails.end()) {
            tails.push_back(key);
            tail_item.push_back(t);
        } else {
            *it = key;
            tail_item[d] = t;
        }
        depth_of[t] = d;
        parent[t] = d > 0 ? tail_item[d - 1] : -1;
    }

    int best_len = static_cast<int>(tails.size());
    int cur = tail_item[best_len - 1];
    std::vector<Edge> chain;
    while (cur != -1) {
        chain.push_back(g.edges()[items[cur].idx]);
        cur = parent[cur];
    }
    std::reverse(chain.begin(), chain.end());  // outermost first

    RainbowResult res;
    res.size = best_len;
    res.witness.edges = std::move(chain);
    return res;
}

bool rainbow_witness_ok(const RainbowWitness& w, const LinearOrder& ord,
                        const QueueLayout* L, const Graph* g) {
    if (w.edges.empty()) return false;
    for (std::size_t i = 0; i < w.edges.size(); ++i)
        for (std::size_t j = i + 1; j < w.edges.size(); ++j)
            if (!nests(w.edges[i], w.edges[j], ord)) return false;
    if (w.queue) {
        if (!L || !g) return false;
        for (const Edge& e : w.edges) {
            int idx = g->edge_index(e.u, e.v);
            if (idx < 0 || L->queue_of[idx] != *w.queue) return false;
        }
    }
    return true;
}

QueueLayout canonical_queue_relabel(const Graph& g, const QueueLayout& L) {
    if (static_cast<int>(L.queue_of.size()) != g.edge_count())
        throw CoverageError("relabel: assignment does not cover edge set");
    struct Item {
        int lo, hi, idx;
    };
    std::vector<Item> items(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        RankSpan rs = rank_span(g.edges()[i], L.order);
        items[i] = {rs.lo, rs.hi, i};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    std::map<int, int> remap;
    for (const Item& it : items) {
        int old = L.queue_of[it.idx];
        if (!remap.count(old)) {
            int fresh = static_cast<int>(remap.size());
            remap[old] = fresh;
        }
    }
    QueueLayout out;
    out.order = L.order;
    out.queue_of.resize(L.queue_of.size());
    for (std::size_t i = 0; i < L.queue_of.size(); ++i) out.queue_of[i] = remap[L.queue_of[i]];
    return out;
}

}  // namespace queuelay
