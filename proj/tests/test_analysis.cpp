#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "probesort/analysis.hpp"
#include "probesort/cliquesolve.hpp"
#include "probesort/errors.hpp"
#include "probesort/generators.hpp"
#include "probesort/solvers.hpp"
#include "test_util.hpp"

using namespace probesort;
using namespace probesort::testutil;

namespace {

// Independent clique oracle: checks every vertex subset. Only viable for
// small n, which is the point.
int max_clique_by_enumeration(const comparison_graph& h) {
    const int n = h.vertex_count();
    REQUIRE(n <= 22);
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : h.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    int best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool is_clique = true;
        for (int v = 0; v < n && is_clique; ++v) {
            if (mask >> v & 1) {
                const std::uint32_t others = mask & ~(std::uint32_t{1} << v);
                if ((others & adj[v]) != others) is_clique = false;
            }
        }
        if (is_clique) best = std::max(best, std::popcount(mask));
    }
    return best;
}

forbidden_graph cycle5_as_h() {
    return forbidden_graph{
        make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})};
}

}  // namespace

TEST_CASE("greedy_coloring on simple forbidden graphs") {
    SUBCASE("no forbidden pairs: one color") {
        const forbidden_graph h{make_graph(4, {})};
        CHECK(greedy_coloring(h).num_colors == 1);
    }
    SUBCASE("forbidden triangle: three colors") {
        const forbidden_graph h{make_graph(3, {{0, 1}, {1, 2}, {0, 2}})};
        CHECK(greedy_coloring(h).num_colors == 3);
    }
    SUBCASE("five-cycle: exactly three colors, two can never suffice") {
        const auto h = cycle5_as_h();
        CHECK(greedy_coloring(h).num_colors == 3);
        // exhaustive: no proper 2-coloring of an odd cycle exists
        for (int assignment = 0; assignment < 32; ++assignment) {
            bool proper = true;
            for (auto [u, v] : h.graph.edges()) {
                if (((assignment >> u) & 1) == ((assignment >> v) & 1)) proper = false;
            }
            CHECK(!proper);
        }
    }
}

TEST_CASE("greedy_coloring output is always a valid solver input") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto inst = gen_er(30, 0.35, seed);
        const auto h = complement(inst.graph);
        const coloring c = greedy_coloring(h, seed);
        CHECK(validate_coloring(inst.graph, c));
    }
}

TEST_CASE("max_clique_exact on canonical graphs") {
    SUBCASE("no edges: a single vertex is the best clique") {
        CHECK(max_clique_exact(forbidden_graph{make_graph(5, {})}) == 1);
    }
    SUBCASE("K4") {
        const forbidden_graph h{complete_graph(4)};
        std::vector<int> witness;
        CHECK(max_clique_exact(h, 64, &witness) == 4);
        CHECK(witness == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("empty vertex set") {
        CHECK(max_clique_exact(forbidden_graph{make_graph(0, {})}) == 0);
    }
    SUBCASE("size cap") {
        CHECK_THROWS_AS(max_clique_exact(forbidden_graph{make_graph(65, {})}),
                        too_large);
        CHECK_THROWS_AS(max_clique_exact(forbidden_graph{make_graph(30, {})}, 20),
                        too_large);
    }
}

TEST_CASE("max_clique_exact agrees with subset enumeration") {
    const auto inst = gen_er(20, 0.5, 7);
    const auto h = complement(inst.graph);
    std::vector<int> witness;
    const int exact = max_clique_exact(h, 64, &witness);
    CHECK(exact == max_clique_by_enumeration(h.graph));
    // the witness really is a clique of H of the reported size
    CHECK(static_cast<int>(witness.size()) == exact);
    for (std::size_t i = 0; i < witness.size(); ++i) {
        for (std::size_t j = i + 1; j < witness.size(); ++j) {
            CHECK(h.graph.has_edge(witness[i], witness[j]));
        }
    }
}

TEST_CASE("estimate_k on extreme graphs") {
    SUBCASE("complete graph: omega(H) = 1") {
        const auto est = estimate_k(complete_graph(9));
        CHECK(est.k == 2);
        CHECK(est.method == estimate_method::exact);
    }
    SUBCASE("edgeless graph: H is complete, k = n+1") {
        const auto est = estimate_k(make_graph(6, {}));
        CHECK(est.k == 7);
    }
    SUBCASE("edgeless graph beyond the exact cap") {
        const auto est = estimate_k(make_graph(70, {}));
        CHECK(est.k == 71);
        CHECK(est.method == estimate_method::greedy);
    }
}

TEST_CASE("greedy estimate never exceeds the exact k and still solves") {
    const auto inst = gen_er(40, 0.5, 3);
    const auto h = complement(inst.graph);
    const int exact_k = max_clique_exact(h) + 1;

    const auto mis = greedy_independent_set(inst.graph);
    const int greedy_k = static_cast<int>(mis.size()) + 1;
    CHECK(greedy_k <= exact_k);

    // witness consistency: the greedy independent set is a clique of H
    for (std::size_t i = 0; i < mis.size(); ++i) {
        for (std::size_t j = i + 1; j < mis.size(); ++j) {
            CHECK(h.graph.has_edge(mis[i], mis[j]));
        }
    }

    // an underestimate still terminates correctly thanks to doubling
    probe_oracle brute_oracle = inst.make_oracle();
    const auto expected = brute_force_solve(brute_oracle, inst.graph);
    probe_oracle oracle = inst.make_oracle();
    const auto store = clique_solve(oracle, inst.graph, std::max(greedy_k, 2));
    CHECK(same_orientation(inst.graph, store, expected));
}

TEST_CASE("estimate_k witness certifies k-1 <= omega(H)") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto inst = gen_er(26, 0.5, seed);
        const auto est = estimate_k(inst.graph);
        const auto h = complement(inst.graph);
        CHECK(static_cast<int>(est.witness.size()) == est.k - 1);
        for (std::size_t i = 0; i < est.witness.size(); ++i) {
            for (std::size_t j = i + 1; j < est.witness.size(); ++j) {
                CHECK(h.graph.has_edge(est.witness[i], est.witness[j]));
            }
        }
    }
}
