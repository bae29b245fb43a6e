#include "probesort/truth.hpp"

#include <string>

#include "probesort/errors.hpp"

namespace probesort {

ground_truth::ground_truth(int n, std::vector<int> order) : order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != n) {
        throw parse_error("order has " + std::to_string(order_.size()) +
                          " entries, expected " + std::to_string(n));
    }
    rank_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = order_[i];
        if (v < 0 || v >= n) {
            throw parse_error("order entry " + std::to_string(v) + " out of range");
        }
        if (rank_[v] != -1) {
            throw parse_error("vertex " + std::to_string(v) + " appears twice in order");
        }
        rank_[v] = i;
    }
}

}  // namespace probesort
