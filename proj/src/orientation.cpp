#include "probesort/orientation.hpp"

#include <algorithm>
#include <string>

#include "probesort/errors.hpp"

namespace probesort {

orientation_store::orientation_store(int n) : n_(n) {
    if (n < 0) throw invalid_vertex("vertex count must be non-negative");
    dir_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

void orientation_store::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw invalid_vertex("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }
}

bool orientation_store::known(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    return dir_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

bool orientation_store::precedes(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const int lo = std::min(u, v), hi = std::max(u, v);
    const std::int8_t d = dir_[static_cast<std::size_t>(lo) * n_ + hi];
    if (d == 0) {
        throw precondition_violated("direction of edge {" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "} is not known");
    }
    return (d == 1) == (u == lo);
}

void orientation_store::record(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_vertex("cannot orient a self pair");
    const int lo = std::min(u, v), hi = std::max(u, v);
    const std::int8_t want = (u == lo) ? 1 : 2;
    std::int8_t& slot = dir_[static_cast<std::size_t>(lo) * n_ + hi];
    if (slot == 0) {
        slot = want;
        ++known_;
    } else if (slot != want) {
        throw internal_error("conflicting directions recorded for edge {" +
                             std::to_string(lo) + "," + std::to_string(hi) + "}");
    }
}

bool orientation_store::all_edges_known(const comparison_graph& g) const {
    for (auto [u, v] : g.edges()) {
        if (!known(u, v)) return false;
    }
    return true;
}

bool orientation_store::all_edges_known_within(const comparison_graph& g,
                                               std::span<const int> vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.has_edge(vertices[i], vertices[j]) &&
                !known(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<int, int>> orientation_store::directed_edges(
    const comparison_graph& g) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (!known(u, v)) {
            throw internal_error("edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} has no direction");
        }
        if (precedes(u, v)) {
            out.emplace_back(u, v);
        } else {
            out.emplace_back(v, u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool edges_acyclic(int n, std::span<const std::pair<int, int>> directed) {
    std::vector<std::vector<int>> out(n);
    std::vector<int> indegree(n, 0);
    for (auto [u, v] : directed) {
        out[u].push_back(v);
        ++indegree[v];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) stack.push_back(v);
    }
    int seen = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v]) {
            if (--indegree[w] == 0) stack.push_back(w);
        }
    }
    return seen == n;
}

orientation_report validate_orientation(const comparison_graph& g,
                                        const orientation_store& o) {
    orientation_report report;
    std::vector<std::pair<int, int>> directed;
    directed.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (!o.known(u, v)) {
            ++report.missing;
        } else if (o.precedes(u, v)) {
            directed.emplace_back(u, v);
        } else {
            directed.emplace_back(v, u);
        }
    }
    report.complete = report.missing == 0;
    report.acyclic = edges_acyclic(g.vertex_count(), directed);
    return report;
}

bool same_orientation(const comparison_graph& g, const orientation_store& a,
                      const orientation_store& b) {
    for (auto [u, v] : g.edges()) {
        if (!a.known(u, v) || !b.known(u, v)) return false;
        if (a.precedes(u, v) != b.precedes(u, v)) return false;
    }
    return true;
}

}  // namespace probesort
