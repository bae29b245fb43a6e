#include "probesort/scaffold.hpp"

#include <algorithm>
#include <string>

#include "probesort/errors.hpp"

namespace probesort {

scaffold_graph::scaffold_graph(int n) : n_(n), out_(n) {
    if (n < 0) throw invalid_vertex("vertex count must be non-negative");
}

void scaffold_graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw invalid_vertex("scaffold edge endpoint out of range");
    }
    if (u == v) throw invalid_vertex("scaffold edges cannot be self loops");
    const std::uint64_t key =
        (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (present_.insert(key).second) {
        out_[u].push_back(v);
        ++m_;
    }
}

bool scaffold_graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    return present_.contains(key);
}

std::vector<std::pair<int, int>> scaffold_graph::edges() const {
    std::vector<std::pair<int, int>> all;
    all.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : out_[u]) all.emplace_back(u, v);
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool reachable(const scaffold_graph& a, int u, int v) {
    const int n = a.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw invalid_vertex("reachability query out of range");
    }
    if (u == v) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const int w = stack.back();
        stack.pop_back();
        for (int x : a.successors(w)) {
            if (x == v) return true;
            if (!seen[x]) {
                seen[x] = 1;
                stack.push_back(x);
            }
        }
    }
    return false;
}

std::vector<std::vector<std::uint64_t>> transitive_closure(const scaffold_graph& a) {
    const int n = a.vertex_count();
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(n,
                                                 std::vector<std::uint64_t>(words, 0));
    std::vector<char> seen(n);
    std::vector<int> stack;
    for (int src = 0; src < n; ++src) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, src);
        seen[src] = 1;
        auto& row = rows[src];
        row[src / 64] |= std::uint64_t{1} << (src % 64);
        while (!stack.empty()) {
            const int w = stack.back();
            stack.pop_back();
            for (int x : a.successors(w)) {
                if (!seen[x]) {
                    seen[x] = 1;
                    row[x / 64] |= std::uint64_t{1} << (x % 64);
                    stack.push_back(x);
                }
            }
        }
    }
    return rows;
}

}  // namespace probesort
