#ifndef PROBESORT_SOLVERS_HPP
#define PROBESORT_SOLVERS_HPP

#include <optional>

#include "probesort/cliquesolve.hpp"
#include "probesort/graph.hpp"
#include "probesort/oracle.hpp"
#include "probesort/orientation.hpp"

namespace probesort {

/// Probes every edge once. The reference orientation; probe count is
/// exactly m.
orientation_store brute_force_solve(probe_oracle& oracle,
                                    const comparison_graph& g);

struct hybrid_options {
    std::optional<double> p_hint;  // edge density if known; estimated from m otherwise
    double threshold_scale = 1.0;  // multiplies the ln(n)/sqrt(n) cutoff
};

struct hybrid_info {
    bool dense_branch = false;
    double p_hat = 0.0;
    double threshold = 0.0;
    int k_used = 0;  // 0 on the brute-force branch
};

/// Density-switching solver: below the ln(n)/sqrt(n) cutoff probing
/// everything is already cheap; above it clique_solve with an estimated k
/// wins.
orientation_store hybrid_solve(probe_oracle& oracle, const comparison_graph& g,
                               const hybrid_options& opts = {},
                               hybrid_info* info = nullptr);

}  // namespace probesort

#endif
