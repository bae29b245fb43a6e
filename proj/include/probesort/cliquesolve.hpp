#ifndef PROBESORT_CLIQUESOLVE_HPP
#define PROBESORT_CLIQUESOLVE_HPP

#include <set>
#include <span>
#include <vector>

#include "probesort/graph.hpp"
#include "probesort/oracle.hpp"
#include "probesort/orientation.hpp"

namespace probesort {

/// Rooted forest over a set of active vertices. Every parent link is a
/// G-edge whose known orientation is child -> parent.
class tree_forest {
public:
    tree_forest(int n_universe, std::span<const int> members);

    const std::set<int>& roots() const { return roots_; }
    bool alive(int v) const { return alive_[v]; }
    bool is_root(int v) const { return alive_[v] && parent_[v] < 0; }
    int parent(int v) const { return parent_[v]; }

    /// Links the tree rooted at child_root under parent_root. Both
    /// arguments must currently be roots.
    void link(int child_root, int parent_root);

    /// All vertices of the tree rooted at `root`, including the root.
    std::vector<int> tree_members(int root) const;

    /// Removes `root` from the forest; each of its children becomes the
    /// root of its own subtree.
    void delete_root(int root);

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<char> alive_;
    std::set<int> roots_;
};

struct clique_solve_stats {
    long select_calls = 0;
    long pivot_calls = 0;
    long direct_edges_calls = 0;
    long zero_probe_checks = 0;  // pivot invocations verified probe-free
    long retries = 0;            // k doublings triggered by k_too_small
    int k_initial = 0;
    int k_final = 0;
};

struct select_result {
    std::vector<int> alive;               // surviving vertices Z, ascending
    std::vector<std::vector<int>> gains;  // gains[u] = recorded set for u
    std::vector<std::vector<int>> round_roots;  // roots deleted per round
};

struct pivot_result {
    int pivot = -1;
    std::vector<int> s_plus;   // known successors of the pivot
    std::vector<int> s_minus;  // known predecessors of the pivot
};

/// Runs ceil(n/3k) rounds of tree merging and root deletion over the
/// subgraph induced by `active` (n = |active| > 10k required). All
/// comparisons are lookups in `known`; no probes are made. Returns the
/// surviving set Z with |Z| > n/2 and, for every u in Z, a set gains[u] of
/// at least ceil(n/3k) known successors of u. Throws precondition_violated
/// when a needed orientation is missing or the size bound fails, and
/// k_too_small when a round ends with >= k mutually incomparable roots.
select_result select(const orientation_store& known, const comparison_graph& g,
                     std::span<const int> active, int k,
                     clique_solve_stats* stats = nullptr);

/// As select, run on the reversed orientation: gains[u] collects known
/// predecessors of u.
select_result select_reversed(const orientation_store& known,
                              const comparison_graph& g,
                              std::span<const int> active, int k,
                              clique_solve_stats* stats = nullptr);

/// Picks the smallest vertex surviving both select passes, together with
/// its successor and predecessor sets, each of size >= ceil(n/3k).
/// Probe-free. Throws empty_intersection if no vertex survives both.
pivot_result pivot(const orientation_store& known, const comparison_graph& g,
                   std::span<const int> active, int k,
                   clique_solve_stats* stats = nullptr);

/// Determines the direction of every edge {u, x}, x in s, and records it in
/// `known`. Every x in s must be a G-neighbor of u and all edges within s
/// must already be known. While |s| > 10k one probe against a pivot settles
/// the pivot edge plus a guaranteed fraction of s; the remainder is probed
/// directly. A completed call makes at most
/// 10k + ceil(log|s| / log(1/(1-1/3k))) + 1 probe invocations.
void direct_edges(probe_oracle& oracle, const comparison_graph& g, int u,
                  std::span<const int> s, orientation_store& known, int k,
                  clique_solve_stats* stats = nullptr);

/// Recovers the full hidden orientation by processing vertices in id order
/// and directing each vertex's edges toward already-processed neighbors.
/// Requires k >= 2; intended for k >= omega(H)+1 (every k vertices span an
/// edge). When k proves too small mid-run, the failed call is restarted
/// with k doubled (capped at n); memoized probes keep restarts cheap.
orientation_store clique_solve(probe_oracle& oracle, const comparison_graph& g,
                               int k, clique_solve_stats* stats = nullptr);

}  // namespace probesort

#endif
