#ifndef PROBESORT_ORIENTATION_HPP
#define PROBESORT_ORIENTATION_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "probesort/graph.hpp"

namespace probesort {

/// Accumulated knowledge about edge directions. Each edge {u,v} is keyed
/// canonically by (min,max) with one direction bit, so the store can never
/// hold two directions for the same edge.
class orientation_store {
public:
    orientation_store() = default;
    explicit orientation_store(int n);

    int vertex_count() const { return n_; }
    std::size_t known_count() const { return known_; }

    bool known(int u, int v) const;

    /// True iff u -> v is stored. Throws precondition_violated when the
    /// edge direction has not been recorded.
    bool precedes(int u, int v) const;

    /// Records u -> v. Recording the same direction twice is a no-op;
    /// recording the opposite direction throws internal_error.
    void record(int u, int v);

    /// Every edge of g has a direction here.
    bool all_edges_known(const comparison_graph& g) const;

    /// Every edge of g with both endpoints in `vertices` has a direction.
    bool all_edges_known_within(const comparison_graph& g,
                                std::span<const int> vertices) const;

    /// The stored direction of each edge of g as directed pairs, sorted
    /// lexicographically. Throws internal_error if an edge is missing.
    std::vector<std::pair<int, int>> directed_edges(const comparison_graph& g) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::int8_t> dir_;  // 0 unknown, 1 lo->hi, 2 hi->lo
    std::size_t known_ = 0;
};

struct orientation_report {
    bool complete = false;
    bool acyclic = false;
    std::size_t missing = 0;  // edges of G without a direction
    bool ok() const { return complete && acyclic; }
};

/// Checks that every edge of g is directed in o and that the resulting
/// directed graph has no cycle. Problems are reported, never thrown.
orientation_report validate_orientation(const comparison_graph& g,
                                        const orientation_store& o);

/// True iff the two stores agree on the direction of every edge of g
/// (both must be complete on g).
bool same_orientation(const comparison_graph& g, const orientation_store& a,
                      const orientation_store& b);

/// Kahn-style acyclicity check over an explicit directed edge list.
bool edges_acyclic(int n, std::span<const std::pair<int, int>> directed);

}  // namespace probesort

#endif
