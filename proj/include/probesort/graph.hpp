#ifndef PROBESORT_GRAPH_HPP
#define PROBESORT_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace probesort {

/// Undirected graph of allowed comparisons. Vertices are dense ids 0..n-1;
/// edges are stored canonically as (u, v) with u < v, sorted ascending.
class comparison_graph {
public:
    comparison_graph() = default;

    /// Builds the graph from an edge list. Pairs may arrive in either
    /// orientation; they are canonicalized. Throws invalid_vertex,
    /// self_loop or duplicate_edge on bad input.
    comparison_graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Neighbors of v, sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// All edges as (u, v), u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const comparison_graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    // Dense adjacency bits for O(1) has_edge on small graphs.
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
};

/// The complement of a comparison graph: pairs that can never be compared.
struct forbidden_graph {
    comparison_graph graph;
};

/// Complement on the same vertex set; every pair {u,v}, u != v, is an edge
/// of exactly one of g and the result.
forbidden_graph complement(const comparison_graph& g);

}  // namespace probesort

#endif
