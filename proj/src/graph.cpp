#include "probesort/graph.hpp"

#include <algorithm>
#include <string>

#include "probesort/errors.hpp"

namespace probesort {

namespace {
// Dense adjacency bits stay cheap up to this size (8 MiB at the cap).
constexpr int kBitsCap = 8192;
}  // namespace

comparison_graph::comparison_graph(int n, std::vector<std::pair<int, int>> edge_list)
    : n_(n) {
    if (n < 0) throw invalid_vertex("vertex count must be non-negative");
    adj_.resize(n_);
    for (auto& [u, v] : edge_list) {
        if (u == v) throw self_loop("self loop at vertex " + std::to_string(u));
        check_vertex(u);
        check_vertex(v);
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
    if (dup != edge_list.end()) {
        throw duplicate_edge("duplicate edge {" + std::to_string(dup->first) + "," +
                             std::to_string(dup->second) + "}");
    }
    edges_ = std::move(edge_list);

    if (n_ <= kBitsCap) {
        words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        bits_.assign(words_ * n_, 0);
    }
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        if (!bits_.empty()) {
            bits_[words_ * u + v / 64] |= std::uint64_t{1} << (v % 64);
            bits_[words_ * v + u / 64] |= std::uint64_t{1} << (u % 64);
        }
    }
    // neighbor lists come out sorted because edges_ is sorted, except the
    // low endpoints appended after high ones
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void comparison_graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw invalid_vertex("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }
}

bool comparison_graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (!bits_.empty()) {
        return bits_[words_ * u + v / 64] >> (v % 64) & 1;
    }
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

forbidden_graph complement(const comparison_graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> missing;
    missing.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edge_count());
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), u + 1);
        for (int v = u + 1; v < n; ++v) {
            if (it != nb.end() && *it == v) {
                ++it;
            } else {
                missing.emplace_back(u, v);
            }
        }
    }
    return forbidden_graph{comparison_graph(n, std::move(missing))};
}

}  // namespace probesort
