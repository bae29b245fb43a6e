#include "probesort/generators.hpp"

#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "probesort/errors.hpp"

namespace probesort {

namespace {

// mt19937_64 output is pinned by the standard, so instances built from
// these helpers are identical across platforms.
double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

void shuffle_ids(std::vector<int>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[next_below(rng, i)]);
    }
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

void check_params(int n, double p) {
    if (n < 1) throw precondition_violated("instance needs n >= 1");
    if (p < 0.0 || p > 1.0) {
        throw precondition_violated("edge probability must lie in [0,1]");
    }
}

}  // namespace

const char* to_string(instance_model m) {
    switch (m) {
        case instance_model::er: return "er";
        case instance_model::nutsbolts: return "nutsbolts";
        case instance_model::stochastic: return "stochastic";
        case instance_model::file: return "file";
    }
    return "?";
}

instance_model model_from_string(const std::string& s) {
    if (s == "er") return instance_model::er;
    if (s == "nutsbolts") return instance_model::nutsbolts;
    if (s == "stochastic") return instance_model::stochastic;
    if (s == "file") return instance_model::file;
    throw parse_error("unknown instance model '" + s + "'");
}

instance gen_er(int n, double p, std::uint64_t seed) {
    check_params(n, p);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (next_double(rng) < p) edges.emplace_back(u, v);
        }
    }
    std::vector<int> order = identity_order(n);
    shuffle_ids(order, rng);
    comparison_graph graph(n, std::move(edges));
    return instance{std::move(graph), ground_truth(n, std::move(order))};
}

instance gen_nuts_bolts(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) {
        throw odd_n("nuts-and-bolts instances need an even n >= 2, got " +
                    std::to_string(n));
    }
    const int half = n / 2;
    std::mt19937_64 rng(seed);

    std::vector<int> nuts(half), bolts(half);
    std::iota(nuts.begin(), nuts.end(), 0);
    std::iota(bolts.begin(), bolts.end(), half);
    shuffle_ids(nuts, rng);
    shuffle_ids(bolts, rng);
    const bool nuts_first = next_below(rng, 2) == 0;

    // ranks alternate between the halves, so consecutive ranks are always
    // comparable and the hidden orientation has a Hamiltonian path
    std::vector<int> order(n);
    for (int i = 0; i < half; ++i) {
        order[2 * i] = nuts_first ? nuts[i] : bolts[i];
        order[2 * i + 1] = nuts_first ? bolts[i] : nuts[i];
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(half) * half);
    for (int u = 0; u < half; ++u) {
        for (int v = half; v < n; ++v) edges.emplace_back(u, v);
    }
    comparison_graph graph(n, std::move(edges));
    return instance{std::move(graph), ground_truth(n, std::move(order))};
}

instance gen_stochastic(int n, double p, std::uint64_t seed) {
    check_params(n, p);
    std::mt19937_64 rng(seed);
    std::vector<int> order = identity_order(n);
    shuffle_ids(order, rng);

    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool consecutive = std::abs(rank[u] - rank[v]) == 1;
            if (consecutive || next_double(rng) < p) edges.emplace_back(u, v);
        }
    }
    comparison_graph graph(n, std::move(edges));
    return instance{std::move(graph), ground_truth(n, std::move(order))};
}

instance generate(const instance_spec& spec) {
    switch (spec.model) {
        case instance_model::er: return gen_er(spec.n, spec.p, spec.seed);
        case instance_model::nutsbolts: return gen_nuts_bolts(spec.n, spec.seed);
        case instance_model::stochastic:
            return gen_stochastic(spec.n, spec.p, spec.seed);
        case instance_model::file:
            throw precondition_violated("model 'file' has no generator");
    }
    throw precondition_violated("unknown instance model");
}

}  // namespace probesort
