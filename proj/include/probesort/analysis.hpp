#ifndef PROBESORT_ANALYSIS_HPP
#define PROBESORT_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "probesort/coloring.hpp"
#include "probesort/graph.hpp"

namespace probesort {

enum class estimate_method { exact, greedy, doubling };

/// Estimated clique bound k for clique_solve. With method exact,
/// k-1 == omega(H) precisely. `witness` is a clique of H certifying
/// k-1 <= omega(H).
struct param_estimate {
    int k = 0;
    estimate_method method = estimate_method::exact;
    std::vector<int> witness;
};

/// Welsh-Powell greedy coloring of H: vertices in order of decreasing
/// H-degree (ties broken by a seeded shuffle), each taking the smallest
/// color unused by its H-neighbors. Always proper for H, hence always a
/// valid color_solve input; uses at least chi(H) colors.
coloring greedy_coloring(const forbidden_graph& h, std::uint64_t order_seed = 0);

/// Exact clique number of H via branch and bound with a greedy coloring
/// bound. omega of the empty vertex set is 0, of any nonempty graph >= 1.
/// Throws too_large when |V| exceeds size_limit.
int max_clique_exact(const forbidden_graph& h, int size_limit = 64,
                     std::vector<int>* witness = nullptr);

/// Maximal independent set of g grown greedily in ascending id order.
/// Equals a clique of H, so its size lower-bounds omega(H).
std::vector<int> greedy_independent_set(const comparison_graph& g);

/// k = omega(H)+1, exact for n <= 64, otherwise the greedy independent-set
/// lower bound + 1 (clique_solve's doubling retry absorbs underestimates).
param_estimate estimate_k(const comparison_graph& g);

}  // namespace probesort

#endif
