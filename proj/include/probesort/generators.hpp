#ifndef PROBESORT_GENERATORS_HPP
#define PROBESORT_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "probesort/graph.hpp"
#include "probesort/oracle.hpp"
#include "probesort/truth.hpp"

namespace probesort {

enum class instance_model { er, nutsbolts, stochastic, file };

const char* to_string(instance_model m);
instance_model model_from_string(const std::string& s);

struct instance_spec {
    instance_model model = instance_model::er;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// A generated problem: the comparison graph plus the hidden order. Make a
/// fresh oracle per solver run; the instance must outlive its oracles.
struct instance {
    comparison_graph graph;
    ground_truth truth;

    probe_oracle make_oracle() const& { return probe_oracle(graph, truth); }
    probe_oracle make_oracle() const&& = delete;
};

/// Erdos-Renyi G(n,p) with a uniform random hidden order. Same seed,
/// same instance.
instance gen_er(int n, double p, std::uint64_t seed);

/// Complete bipartite graph on two halves with ranks alternating strictly
/// between them, so the hidden orientation has a Hamiltonian path.
/// Throws odd_n for odd n.
instance gen_nuts_bolts(int n, std::uint64_t seed);

/// Random hidden order whose n-1 consecutive-rank pairs are always edges;
/// every other pair is added independently with probability p.
instance gen_stochastic(int n, double p, std::uint64_t seed);

/// Dispatch on spec.model (instance_model::file is not generative).
instance generate(const instance_spec& spec);

}  // namespace probesort

#endif
