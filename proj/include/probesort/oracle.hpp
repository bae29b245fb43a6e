#ifndef PROBESORT_ORACLE_HPP
#define PROBESORT_ORACLE_HPP

#include "probesort/graph.hpp"
#include "probesort/orientation.hpp"
#include "probesort/truth.hpp"

namespace probesort {

/// Counting, memoizing gateway to the hidden orientation. The only path by
/// which solvers may learn edge directions. Holds references; the graph and
/// truth must outlive the oracle. One oracle per solver run.
class probe_oracle {
public:
    probe_oracle(const comparison_graph& g, const ground_truth& t);

    /// Returns true iff u precedes v. {u,v} must be an edge of G
    /// (forbidden_pair otherwise; invalid_vertex for ids out of range).
    /// The first probe of an edge is counted; repeats are free.
    bool probe(int u, int v);

    /// Distinct edges probed so far — the cost being minimized.
    long probe_count() const { return count_; }

    /// Total probe invocations including memoized repeats.
    long probe_calls() const { return calls_; }

    bool is_cached(int u, int v) const { return cache_.known(u, v); }
    const orientation_store& cache() const { return cache_; }

    const comparison_graph& graph() const { return *g_; }

    /// For verification and reporting only; solvers must not call this.
    const ground_truth& truth() const { return *t_; }

private:
    const comparison_graph* g_;
    const ground_truth* t_;
    orientation_store cache_;
    long count_ = 0;
    long calls_ = 0;
};

}  // namespace probesort

#endif
