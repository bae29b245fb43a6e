#include "probesort/coloring.hpp"

#include <vector>

namespace probesort {

bool validate_coloring(const comparison_graph& g, const coloring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.color.size()) != n) return false;
    std::vector<std::vector<int>> classes(c.num_colors + 1);
    for (int v = 0; v < n; ++v) {
        const int f = c.color[v];
        if (f < 1 || f > c.num_colors) return false;
        classes[f].push_back(v);
    }
    for (const auto& cls : classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (!g.has_edge(cls[i], cls[j])) return false;
            }
        }
    }
    return true;
}

}  // namespace probesort
