#include "probesort/verify.hpp"

#include <algorithm>

#include "probesort/orientation.hpp"

namespace probesort {

verify_report verify(const comparison_graph& g, const ground_truth& t,
                     std::span<const std::pair<int, int>> directed) {
    verify_report report;
    const int n = g.vertex_count();

    std::vector<char> covered(g.edge_count(), 0);
    std::vector<std::pair<int, int>> sorted_edges = g.edges();
    auto edge_index = [&sorted_edges](int u, int v) -> long {
        if (u > v) std::swap(u, v);
        const auto it = std::lower_bound(sorted_edges.begin(), sorted_edges.end(),
                                         std::make_pair(u, v));
        if (it == sorted_edges.end() || *it != std::make_pair(u, v)) return -1;
        return it - sorted_edges.begin();
    };

    std::vector<std::pair<int, int>> usable;
    usable.reserve(directed.size());
    for (auto [u, v] : directed) {
        const long idx = edge_index(u, v);
        if (idx < 0 || covered[idx]) {
            ++report.extra;  // not an edge of G, or a second direction for one
            continue;
        }
        covered[idx] = 1;
        usable.emplace_back(u, v);
        if (!t.precedes(u, v)) report.flipped.emplace_back(u, v);
    }
    report.missing = g.edge_count() -
                     static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));
    report.complete = report.missing == 0 && report.extra == 0;
    report.acyclic = edges_acyclic(n, usable);
    report.matches_truth = report.complete && report.flipped.empty();
    return report;
}

}  // namespace probesort
