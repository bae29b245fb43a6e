#ifndef PROBESORT_COLORSOLVE_HPP
#define PROBESORT_COLORSOLVE_HPP

#include <span>
#include <vector>

#include "probesort/coloring.hpp"
#include "probesort/graph.hpp"
#include "probesort/oracle.hpp"
#include "probesort/orientation.hpp"
#include "probesort/scaffold.hpp"

namespace probesort {

struct color_solve_stats {
    long merge_sort_calls = 0;
    long add_edges_calls = 0;
    long probe_calls = 0;   // invocations made by the whole run
    long probe_budget = 0;  // n*ceil(log2 n) + 2nk
    std::size_t scaffold_edges = 0;
};

/// Sorts one color class ascending under the hidden order. Every pair in
/// `cls` must be an edge of G (guaranteed by a valid coloring; the oracle
/// throws forbidden_pair otherwise). Uses at most |cls|*ceil(log2 |cls|)
/// probe invocations; a violation throws internal_error.
std::vector<int> merge_sort_class(probe_oracle& oracle, std::span<const int> cls,
                                  color_solve_stats* stats = nullptr);

/// Two-pointer pass that links vertices of the sorted chain `src` into the
/// sorted chain `dst`. Walks src from its maximum down, maintaining a
/// right pointer R into dst that only ever moves left: probing
/// (src[L], dst[x]) for comparable x < R, a 1 tightens R to x and the scan
/// continues, a 0 ends the scan for this L. When R points into dst
/// afterwards, src[L] precedes dst[R-1]; the edge src[L] -> dst[R-1] is
/// added to `a` whenever it is also an edge of g (otherwise it is already
/// implied by edges of `a`). Each probe strictly decreases L+R, so one call
/// makes at most |dst| + |src| probe invocations (internal_error if not).
void add_edges(probe_oracle& oracle, const comparison_graph& g,
               std::span<const int> dst, std::span<const int> src,
               scaffold_graph& a, color_solve_stats* stats = nullptr);

/// Recovers the full hidden orientation from a valid coloring: sorts each
/// color class, links every ordered pair of chains with add_edges, then
/// orients each edge {u,v} of g as u -> v iff v is reachable from u in the
/// scaffold. Output matches the hidden orientation exactly.
orientation_store color_solve(probe_oracle& oracle, const comparison_graph& g,
                              const coloring& c, color_solve_stats* stats = nullptr);

}  // namespace probesort

#endif
