#ifndef QUEUELAY_GRAPH_HPP
#define QUEUELAY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "queuelay/common.hpp"

namespace queuelay {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw GraphError("self-loop on vertex " + std::to_string(a));
    }

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}
inline std::uint64_t edge_key(const Edge& e) { return edge_key(e.u, e.v); }

// Simple undirected graph over vertices 0..n-1 with a stable, sorted edge list.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const { return index_.count(edge_key(u, v)) != 0; }
    // Index into edges(), or -1 if the edge is absent.
    int edge_index(int u, int v) const {
        auto it = index_.find(edge_key(u, v));
        return it == index_.end() ? -1 : it->second;
    }
    int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw GraphError("unknown vertex " + std::to_string(v));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::uint64_t, int> index_;
};

// Text format: first line "n m", then one "u v" line per edge with u < v,
// vertices 0-indexed. Round-trips byte-identically through emit_edge_list.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Degeneracy order by repeated removal of a minimum-degree vertex.
// tie_largest_id selects which vertex id wins among minimum-degree candidates.
std::vector<int> degeneracy_order(const Graph& g, bool tie_largest_id);
int degeneracy(const Graph& g);

}  // namespace queuelay

#endif
