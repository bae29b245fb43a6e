#ifndef PROBESORT_VERIFY_HPP
#define PROBESORT_VERIFY_HPP

#include <span>
#include <utility>
#include <vector>

#include "probesort/graph.hpp"
#include "probesort/truth.hpp"

namespace probesort {

struct verify_report {
    bool complete = false;      // every edge of G directed exactly once
    bool acyclic = false;
    bool matches_truth = false; // every direction agrees with the order
    std::size_t missing = 0;    // edges of G absent from the file
    std::size_t extra = 0;      // pairs that are not edges of G, or repeats
    std::vector<std::pair<int, int>> flipped;  // directions contradicting the order
    bool ok() const { return complete && acyclic && matches_truth; }
};

/// Checks a claimed orientation (directed pairs, as loaded from a file)
/// against the graph and the hidden order.
verify_report verify(const comparison_graph& g, const ground_truth& t,
                     std::span<const std::pair<int, int>> directed);

}  // namespace probesort

#endif
