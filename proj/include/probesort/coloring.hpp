#ifndef PROBESORT_COLORING_HPP
#define PROBESORT_COLORING_HPP

#include <vector>

#include "probesort/graph.hpp"

namespace probesort {

/// Assignment of colors 1..num_colors to vertices. Valid as solver input
/// when every same-color pair is an edge of G, i.e. the coloring is proper
/// for the forbidden graph H.
struct coloring {
    std::vector<int> color;  // color[v] in 1..num_colors
    int num_colors = 0;
};

/// True iff every pair of same-colored vertices is an edge of g.
bool validate_coloring(const comparison_graph& g, const coloring& c);

}  // namespace probesort

#endif
