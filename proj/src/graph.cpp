#include "queuelay/graph.hpp"

#include <algorithm>
#include <sstream>

namespace queuelay {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw GraphError("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, {});
    index_.reserve(edges_.size() * 2);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= n_)
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") out of range for n=" + std::to_string(n_));
        if (i > 0 && edges_[i - 1] == e)
            throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        index_.emplace(edge_key(e), static_cast<int>(i));
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("edge list line " + std::to_string(lineno) + ": " + what);
    };

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream hdr(line);
        if (!(hdr >> n >> m)) fail("expected header \"n m\"");
        std::string rest;
        if (hdr >> rest) fail("trailing tokens after header");
        break;
    }
    if (n < 0 || m < 0) throw ParseError("edge list: missing header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) fail("expected \"u v\"");
        std::string rest;
        if (es >> rest) fail("trailing tokens after edge");
        if (u >= v) fail("edges must satisfy u < v");
        if (u < 0 || v >= n) fail("vertex out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        if (static_cast<long long>(edges.size()) > m) fail("more edges than declared");
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge list: declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<int> degeneracy_order(const Graph& g, bool tie_largest_id) {
    int n = g.vertex_count();
    std::vector<int> deg(n), removed(n, 0), out;
    out.reserve(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[v]) continue;
            if (best == -1 || deg[v] < deg[best] ||
                (deg[v] == deg[best] && (tie_largest_id ? v > best : v < best)))
                best = v;
        }
        removed[best] = 1;
        out.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    return out;
}

int degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best] ||
                                (deg[v] == deg[best] && v < best)))
                best = v;
        d = std::max(d, deg[best]);
        removed[best] = 1;
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    return d;
}

}  // namespace queuelay
