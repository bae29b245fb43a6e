#ifndef PROBESORT_TRUTH_HPP
#define PROBESORT_TRUTH_HPP

#include <vector>

namespace probesort {

/// The hidden total order behind an instance. order[i] is the vertex with
/// rank i (first = minimum). Only the oracle should consult it during a
/// solve; tests and verifiers use it to check results.
class ground_truth {
public:
    ground_truth() = default;

    /// Throws parse_error if `order` is not a permutation of 0..n-1.
    ground_truth(int n, std::vector<int> order);

    int vertex_count() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    int rank_of(int v) const { return rank_[v]; }

    /// u strictly precedes v in the hidden order.
    bool precedes(int u, int v) const { return rank_[u] < rank_[v]; }

private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

}  // namespace probesort

#endif
