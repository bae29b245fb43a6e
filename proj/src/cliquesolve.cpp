#include "probesort/cliquesolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "probesort/errors.hpp"

namespace probesort {

tree_forest::tree_forest(int n_universe, std::span<const int> members)
    : parent_(n_universe, -1), children_(n_universe), alive_(n_universe, 0) {
    for (int v : members) {
        if (v < 0 || v >= n_universe) {
            throw invalid_vertex("forest member " + std::to_string(v) + " out of range");
        }
        if (alive_[v]) {
            throw precondition_violated("forest member " + std::to_string(v) +
                                        " listed twice");
        }
        alive_[v] = 1;
        roots_.insert(v);
    }
}

void tree_forest::link(int child_root, int parent_root) {
    if (!is_root(child_root) || !is_root(parent_root) || child_root == parent_root) {
        throw precondition_violated("link requires two distinct roots");
    }
    parent_[child_root] = parent_root;
    children_[parent_root].push_back(child_root);
    roots_.erase(child_root);
}

std::vector<int> tree_forest::tree_members(int root) const {
    if (!is_root(root)) throw precondition_violated("tree_members requires a root");
    std::vector<int> members;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        members.push_back(v);
        stack.insert(stack.end(), children_[v].begin(), children_[v].end());
    }
    return members;
}

void tree_forest::delete_root(int root) {
    if (!is_root(root)) throw precondition_violated("delete_root requires a root");
    for (int c : children_[root]) {
        parent_[c] = -1;
        roots_.insert(c);
    }
    children_[root].clear();
    roots_.erase(root);
    alive_[root] = 0;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// select over either orientation: with `reversed`, the roles of
// predecessor and successor swap, as if every known edge were flipped.
select_result select_impl(const orientation_store& known, const comparison_graph& g,
                          std::span<const int> active, int k, bool reversed,
                          clique_solve_stats* stats) {
    const int n_sub = static_cast<int>(active.size());
    if (k < 1 || n_sub <= 10 * k) {
        throw precondition_violated("select needs |active| > 10k, got " +
                                    std::to_string(n_sub) + " vertices with k=" +
                                    std::to_string(k));
    }
    std::vector<int> vertices(active.begin(), active.end());
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.has_edge(vertices[i], vertices[j]) &&
                !known.known(vertices[i], vertices[j])) {
                throw precondition_violated(
                    "edge {" + std::to_string(vertices[i]) + "," +
                    std::to_string(vertices[j]) + "} in the subproblem is not known");
            }
        }
    }
    auto precedes = [&known, reversed](int a, int b) {
        return reversed ? known.precedes(b, a) : known.precedes(a, b);
    };

    tree_forest forest(g.vertex_count(), vertices);
    select_result result;
    result.gains.resize(g.vertex_count());
    std::vector<char> in_z(g.vertex_count(), 0);
    for (int v : vertices) in_z[v] = 1;

    const int rounds = ceil_div(n_sub, 3 * k);
    for (int round = 0; round < rounds; ++round) {
        // merge while some two roots are comparable: scan roots ascending,
        // take the first adjacent pair, link the smaller under the larger
        for (;;) {
            const auto& roots = forest.roots();
            int r1 = -1, r2 = -1;
            for (auto it1 = roots.begin(); it1 != roots.end() && r1 < 0; ++it1) {
                for (auto it2 = std::next(it1); it2 != roots.end(); ++it2) {
                    if (g.has_edge(*it1, *it2)) {
                        r1 = *it1;
                        r2 = *it2;
                        break;
                    }
                }
            }
            if (r1 < 0) break;
            if (precedes(r1, r2)) {
                forest.link(r1, r2);
            } else {
                forest.link(r2, r1);
            }
        }
        // the surviving roots are pairwise incomparable, i.e. a clique of
        // the forbidden graph: fewer than k of them unless k is wrong
        std::vector<int> round_roots(forest.roots().begin(), forest.roots().end());
        if (static_cast<int>(round_roots.size()) >= k) {
            throw k_too_small(std::to_string(round_roots.size()) +
                              " mutually incomparable vertices found; k=" +
                              std::to_string(k) + " underestimates omega(H)+1");
        }
        for (int r : round_roots) {
            for (int u : forest.tree_members(r)) {
                if (u != r) result.gains[u].push_back(r);
            }
        }
        for (int r : round_roots) {
            in_z[r] = 0;
            forest.delete_root(r);
        }
        result.round_roots.push_back(std::move(round_roots));
    }

    for (int v : vertices) {
        if (in_z[v]) result.alive.push_back(v);
    }
    // guaranteed by <k deletions over ceil(n/3k) rounds with n > 10k
    if (2 * static_cast<int>(result.alive.size()) <= n_sub) {
        throw internal_error("select kept only " + std::to_string(result.alive.size()) +
                             " of " + std::to_string(n_sub) + " vertices");
    }
    for (int v : result.alive) {
        if (static_cast<int>(result.gains[v].size()) < rounds) {
            throw internal_error("survivor " + std::to_string(v) + " gained " +
                                 std::to_string(result.gains[v].size()) +
                                 " vertices over " + std::to_string(rounds) + " rounds");
        }
    }
    if (stats) ++stats->select_calls;
    return result;
}

}  // namespace

select_result select(const orientation_store& known, const comparison_graph& g,
                     std::span<const int> active, int k, clique_solve_stats* stats) {
    return select_impl(known, g, active, k, false, stats);
}

select_result select_reversed(const orientation_store& known, const comparison_graph& g,
                              std::span<const int> active, int k,
                              clique_solve_stats* stats) {
    return select_impl(known, g, active, k, true, stats);
}

pivot_result pivot(const orientation_store& known, const comparison_graph& g,
                   std::span<const int> active, int k, clique_solve_stats* stats) {
    select_result fwd = select(known, g, active, k, stats);
    select_result rev = select_reversed(known, g, active, k, stats);

    // both survivor sets hold more than half the vertices, so they meet;
    // take the smallest common id
    std::vector<int> common;
    std::set_intersection(fwd.alive.begin(), fwd.alive.end(), rev.alive.begin(),
                          rev.alive.end(), std::back_inserter(common));
    if (common.empty()) {
        throw empty_intersection("no vertex survived both select passes");
    }
    pivot_result result;
    result.pivot = common.front();
    result.s_plus = std::move(fwd.gains[result.pivot]);
    result.s_minus = std::move(rev.gains[result.pivot]);

    const int need = ceil_div(static_cast<int>(active.size()), 3 * k);
    if (static_cast<int>(result.s_plus.size()) < need ||
        static_cast<int>(result.s_minus.size()) < need) {
        throw internal_error("pivot sets smaller than ceil(n/3k)");
    }
    if (stats) ++stats->pivot_calls;
    return result;
}

void direct_edges(probe_oracle& oracle, const comparison_graph& g, int u,
                  std::span<const int> s, orientation_store& known, int k,
                  clique_solve_stats* stats) {
    for (int x : s) {
        if (!g.has_edge(u, x)) {
            throw precondition_violated("vertex " + std::to_string(x) +
                                        " is not a neighbor of " + std::to_string(u));
        }
    }
    const long calls_before = oracle.probe_calls();
    const std::size_t initial_size = s.size();

    std::vector<int> remaining(s.begin(), s.end());
    std::sort(remaining.begin(), remaining.end());
    std::vector<char> drop(g.vertex_count(), 0);

    while (static_cast<int>(remaining.size()) > 10 * k) {
        const long calls_at_pivot = oracle.probe_calls();
        pivot_result pv = pivot(known, g, remaining, k, stats);
        if (oracle.probe_calls() != calls_at_pivot) {
            throw internal_error("pivot made oracle probes");
        }
        if (stats) ++stats->zero_probe_checks;

        const std::size_t before = remaining.size();
        drop[pv.pivot] = 1;
        if (oracle.probe(u, pv.pivot)) {
            known.record(u, pv.pivot);
            for (int x : pv.s_plus) {  // u < pivot < x
                known.record(u, x);
                drop[x] = 1;
            }
        } else {
            known.record(pv.pivot, u);
            for (int x : pv.s_minus) {  // x < pivot < u
                known.record(x, u);
                drop[x] = 1;
            }
        }
        std::erase_if(remaining, [&drop](int v) { return drop[v]; });

        const std::size_t removed = before - remaining.size();
        const std::size_t need =
            1 + static_cast<std::size_t>(ceil_div(static_cast<int>(before), 3 * k));
        if (removed < need) {
            throw internal_error("pivot step removed " + std::to_string(removed) +
                                 " vertices, expected at least " + std::to_string(need));
        }
    }
    for (int x : remaining) {
        if (oracle.probe(u, x)) {
            known.record(u, x);
        } else {
            known.record(x, u);
        }
    }

    const long used = oracle.probe_calls() - calls_before;
    const double eta = 1.0 - 1.0 / (3.0 * k);
    long budget = 10L * k + 1;
    if (initial_size >= 2) {
        budget += static_cast<long>(
            std::ceil(std::log(static_cast<double>(initial_size)) / std::log(1.0 / eta)));
    }
    if (used > budget) {
        throw internal_error("direct_edges made " + std::to_string(used) +
                             " probes on |s|=" + std::to_string(initial_size) +
                             ", budget " + std::to_string(budget));
    }
    if (stats) ++stats->direct_edges_calls;
}

orientation_store clique_solve(probe_oracle& oracle, const comparison_graph& g, int k,
                               clique_solve_stats* stats) {
    if (k < 2) {
        throw precondition_violated("clique_solve needs k >= 2, got " +
                                    std::to_string(k));
    }
    const int n = g.vertex_count();
    if (stats) {
        stats->k_initial = k;
        stats->k_final = k;
    }
    orientation_store known(n);
    for (int u = 0; u < n; ++u) {
        std::vector<int> processed_neighbors;
        for (int v : g.neighbors(u)) {
            if (v < u) processed_neighbors.push_back(v);
        }
        for (;;) {
            try {
                direct_edges(oracle, g, u, processed_neighbors, known, k, stats);
                break;
            } catch (const k_too_small&) {
            } catch (const empty_intersection&) {
            }
            // k underestimated omega(H)+1; double and redo this vertex.
            // Probes already made are memoized, so the redo costs little.
            const int next_k = std::min(2 * k, n);
            if (next_k <= k) throw internal_error("cannot grow k past " + std::to_string(k));
            k = next_k;
            if (stats) {
                ++stats->retries;
                stats->k_final = k;
            }
        }
    }
    if (!known.all_edges_known(g)) {
        throw internal_error("clique_solve left some edge undirected");
    }
    return known;
}

}  // namespace probesort
