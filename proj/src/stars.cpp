#include "queuelay/stars.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "queuelay/common.hpp"

namespace queuelay {

std::vector<int> min_endpoint_stars(const Graph& g) {
    std::vector<int> stars(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) stars[i] = g.edges()[i].u;
    return stars;
}

std::vector<int> degeneracy_stars(const Graph& g) {
    std::vector<int> removal = degeneracy_order(g, /*tie_largest_id=*/true);
    std::vector<int> removed_at(g.vertex_count());
    for (int t = 0; t < g.vertex_count(); ++t) removed_at[removal[t]] = t;
    std::vector<int> stars(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        stars[i] = removed_at[e.u] > removed_at[e.v] ? e.u : e.v;
    }
    return stars;
}

int partition_locality(const Graph& g, const std::vector<int>& stars) {
    if (static_cast<int>(stars.size()) != g.edge_count())
        throw CoverageError("partition does not cover edge set");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> classes;
        for (int w : g.neighbors(v)) classes.insert(stars[g.edge_index(v, w)]);
        best = std::max(best, static_cast<int>(classes.size()));
    }
    return best;
}

QueueLayout star_layout(const Graph& g, const std::vector<int>& stars,
                        const LinearOrder& ord) {
    if (static_cast<int>(stars.size()) != g.edge_count())
        throw CoverageError("partition does not cover edge set");
    QueueLayout L;
    L.order = ord;
    L.queue_of = stars;
    return canonical_queue_relabel(g, L);
}

QueueLayout construction_order_layout(const Graph& g) {
    return star_layout(g, min_endpoint_stars(g), LinearOrder::identity(g.vertex_count()));
}

QueueLayout bfs_tree_layout(const Graph& g, int root) {
    g.check_vertex(root);
    if (g.edge_count() != g.vertex_count() - 1)
        throw GraphError("not a tree: edge count != vertex count - 1");
    std::vector<int> order;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> bfs;
    bfs.push(root);
    seen[root] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                bfs.push(w);
            }
    }
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw GraphError("not a tree: graph is disconnected");
    QueueLayout L;
    L.order = LinearOrder::from_sequence(std::move(order));
    L.queue_of.assign(g.edge_count(), 0);
    return L;
}

}  // namespace queuelay
