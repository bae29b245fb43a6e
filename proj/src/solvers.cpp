#include "probesort/solvers.hpp"

#include <cmath>

#include "probesort/analysis.hpp"

namespace probesort {

orientation_store brute_force_solve(probe_oracle& oracle, const comparison_graph& g) {
    orientation_store store(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        if (oracle.probe(u, v)) {
            store.record(u, v);
        } else {
            store.record(v, u);
        }
    }
    return store;
}

orientation_store hybrid_solve(probe_oracle& oracle, const comparison_graph& g,
                               const hybrid_options& opts, hybrid_info* info) {
    const int n = g.vertex_count();
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    const double p_hat =
        opts.p_hint.value_or(pairs > 0 ? static_cast<double>(g.edge_count()) / pairs : 0.0);
    const double threshold =
        n >= 2 ? opts.threshold_scale * std::log(static_cast<double>(n)) / std::sqrt(n)
               : 1.0;

    hybrid_info local;
    local.p_hat = p_hat;
    local.threshold = threshold;
    local.dense_branch = p_hat >= threshold;

    orientation_store result(n);
    if (!local.dense_branch) {
        result = brute_force_solve(oracle, g);
    } else {
        const param_estimate est = estimate_k(g);
        clique_solve_stats stats;
        result = clique_solve(oracle, g, est.k, &stats);
        local.k_used = stats.k_final;
    }
    if (info) *info = local;
    return result;
}

}  // namespace probesort
