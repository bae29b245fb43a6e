#ifndef PROBESORT_SCAFFOLD_HPP
#define PROBESORT_SCAFFOLD_HPP

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace probesort {

/// Sparse directed graph whose transitive closure determines all edge
/// directions once color_solve has run. Duplicate inserts are ignored.
class scaffold_graph {
public:
    explicit scaffold_graph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& successors(int v) const { return out_[v]; }

    /// All directed edges, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> out_;
    std::unordered_set<std::uint64_t> present_;
};

/// True iff a directed path u -> ... -> v exists (u == v counts).
bool reachable(const scaffold_graph& a, int u, int v);

/// Row r of the result is the reachability bitset of vertex r (bit v set
/// iff reachable(a, r, v)), packed 64 vertices per word.
std::vector<std::vector<std::uint64_t>> transitive_closure(const scaffold_graph& a);

}  // namespace probesort

#endif
