#include "probesort/colorsolve.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "probesort/errors.hpp"

namespace probesort {

namespace {

int ceil_log2(std::size_t x) {
    int bits = 0;
    for (std::size_t reach = 1; reach < x; reach <<= 1) ++bits;
    return bits;
}

void merge_sort_rec(probe_oracle& oracle, std::vector<int>& v, std::vector<int>& tmp,
                    std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort_rec(oracle, v, tmp, lo, mid);
    merge_sort_rec(oracle, v, tmp, mid, hi);
    std::size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        // strict hidden order: take the left element iff it precedes
        tmp[out++] = oracle.probe(v[a], v[b]) ? v[a++] : v[b++];
    }
    while (a < mid) tmp[out++] = v[a++];
    while (b < hi) tmp[out++] = v[b++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
}

}  // namespace

std::vector<int> merge_sort_class(probe_oracle& oracle, std::span<const int> cls,
                                  color_solve_stats* stats) {
    const long calls_before = oracle.probe_calls();
    std::vector<int> chain(cls.begin(), cls.end());
    std::vector<int> tmp(chain.size());
    merge_sort_rec(oracle, chain, tmp, 0, chain.size());

    const long used = oracle.probe_calls() - calls_before;
    const long budget = static_cast<long>(chain.size()) * ceil_log2(chain.size());
    if (used > budget) {
        throw internal_error("merge sort made " + std::to_string(used) +
                             " probes, budget " + std::to_string(budget));
    }
    if (stats) ++stats->merge_sort_calls;
    return chain;
}

void add_edges(probe_oracle& oracle, const comparison_graph& g,
               std::span<const int> dst, std::span<const int> src,
               scaffold_graph& a, color_solve_stats* stats) {
    const long calls_before = oracle.probe_calls();
    const int dn = static_cast<int>(dst.size());

    int right = dn + 1;  // 1-based pointer into dst; never increases
    for (int left = static_cast<int>(src.size()); left >= 1; --left) {
        const int lv = src[left - 1];
        for (int x = right - 1; x >= 1; --x) {
            const int xv = dst[x - 1];
            if (!g.has_edge(lv, xv)) continue;
            if (oracle.probe(lv, xv)) {
                right = x;  // lv precedes dst[x]; keep scanning leftwards
            } else {
                break;  // dst[x] precedes lv; done with this left vertex
            }
        }
        if (right <= dn) {
            const int rv = dst[right - 1];
            // lv precedes rv here, by the probe that set `right` and the
            // src chain order. When {lv,rv} is not comparable the relation
            // is already implied by the chain edge up to the vertex that
            // set `right`, so the scaffold loses nothing by skipping it.
            if (g.has_edge(lv, rv)) a.add_edge(lv, rv);
        }
    }

    const long used = oracle.probe_calls() - calls_before;
    const long budget = static_cast<long>(dst.size() + src.size());
    if (used > budget) {
        throw internal_error("add_edges made " + std::to_string(used) +
                             " probes on chains of sizes " + std::to_string(dst.size()) +
                             "+" + std::to_string(src.size()));
    }
    if (stats) ++stats->add_edges_calls;
}

orientation_store color_solve(probe_oracle& oracle, const comparison_graph& g,
                              const coloring& c, color_solve_stats* stats) {
    if (!validate_coloring(g, c)) {
        throw invalid_coloring("coloring is not proper for the forbidden graph");
    }
    const int n = g.vertex_count();
    const int k = c.num_colors;
    const long calls_before = oracle.probe_calls();

    std::vector<std::vector<int>> classes(k + 1);
    for (int v = 0; v < n; ++v) classes[c.color[v]].push_back(v);

    scaffold_graph a(n);
    std::vector<std::vector<int>> chains(k + 1);
    for (int i = 1; i <= k; ++i) {
        if (classes[i].empty()) continue;
        chains[i] = merge_sort_class(oracle, classes[i], stats);
        for (std::size_t j = 0; j + 1 < chains[i].size(); ++j) {
            a.add_edge(chains[i][j], chains[i][j + 1]);
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            add_edges(oracle, g, chains[i], chains[j], a, stats);
        }
    }

    // orient every edge off the scaffold's closure; no further probes
    const auto closure = transitive_closure(a);
    auto reaches = [&closure](int u, int v) {
        return closure[u][v / 64] >> (v % 64) & 1;
    };
    orientation_store result(n);
    for (auto [u, v] : g.edges()) {
        const bool fwd = reaches(u, v);
        const bool back = reaches(v, u);
        if (fwd == back) {
            throw internal_error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} reachable in " + (fwd ? "both directions" : "neither direction"));
        }
        if (fwd) {
            result.record(u, v);
        } else {
            result.record(v, u);
        }
    }

    const long used = oracle.probe_calls() - calls_before;
    const long budget = static_cast<long>(n) * ceil_log2(static_cast<std::size_t>(n)) +
                        2L * n * k;
    if (used > budget) {
        throw internal_error("color_solve made " + std::to_string(used) +
                             " probes, budget " + std::to_string(budget));
    }
    if (stats) {
        stats->probe_calls += used;
        stats->probe_budget = budget;
        stats->scaffold_edges = a.edge_count();
    }
    return result;
}

}  // namespace probesort
