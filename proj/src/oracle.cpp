#include "probesort/oracle.hpp"

#include <string>

#include "probesort/errors.hpp"

namespace probesort {

probe_oracle::probe_oracle(const comparison_graph& g, const ground_truth& t)
    : g_(&g), t_(&t), cache_(g.vertex_count()) {
    if (t.vertex_count() != g.vertex_count()) {
        throw precondition_violated("order covers " + std::to_string(t.vertex_count()) +
                                    " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    }
}

bool probe_oracle::probe(int u, int v) {
    if (!g_->has_edge(u, v)) {  // has_edge validates the ids
        throw forbidden_pair("{" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not an edge of G");
    }
    ++calls_;
    if (!cache_.known(u, v)) {
        ++count_;
        if (t_->precedes(u, v)) {
            cache_.record(u, v);
        } else {
            cache_.record(v, u);
        }
    }
    return cache_.precedes(u, v);
}

}  // namespace probesort
