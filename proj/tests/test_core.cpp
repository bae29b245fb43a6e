#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "probesort/errors.hpp"
#include "probesort/generators.hpp"
#include "probesort/io.hpp"
#include "probesort/oracle.hpp"
#include "probesort/orientation.hpp"
#include "probesort/scaffold.hpp"
#include "test_util.hpp"

using namespace probesort;
using namespace probesort::testutil;

TEST_CASE("probe reveals directions and memoizes") {
    const auto g = make_graph(2, {{0, 1}});
    const auto t = identity_truth(2);
    probe_oracle oracle(g, t);

    CHECK(oracle.probe_count() == 0);
    CHECK(oracle.probe(0, 1) == true);
    CHECK(oracle.probe_count() == 1);

    // same edge, other direction: answered from the cache
    CHECK(oracle.probe(1, 0) == false);
    CHECK(oracle.probe_count() == 1);
    CHECK(oracle.probe_calls() == 2);
}

TEST_CASE("probe rejects forbidden pairs and bad ids") {
    const auto g = path_graph(3);  // 0-1-2, {0,2} forbidden
    const auto t = identity_truth(3);
    probe_oracle oracle(g, t);

    CHECK_THROWS_AS(oracle.probe(0, 2), forbidden_pair);
    CHECK_THROWS_AS(oracle.probe(0, 3), invalid_vertex);
    CHECK_THROWS_AS(oracle.probe(-1, 1), invalid_vertex);
    CHECK(oracle.probe_count() == 0);
}

TEST_CASE("probing a full triangle yields an acyclic single-source orientation") {
    const auto g = complete_graph(3);
    const auto t = identity_truth(3);  // 0 < 1 < 2
    probe_oracle oracle(g, t);

    orientation_store store(3);
    for (auto [u, v] : g.edges()) {
        if (oracle.probe(u, v)) {
            store.record(u, v);
        } else {
            store.record(v, u);
        }
    }
    const auto report = validate_orientation(g, store);
    CHECK(report.complete);
    CHECK(report.acyclic);
    // exactly one source: the minimum
    int sources = 0;
    for (int v = 0; v < 3; ++v) {
        bool has_pred = false;
        for (int w = 0; w < 3; ++w) {
            if (w != v && store.precedes(w, v)) has_pred = true;
        }
        if (!has_pred) {
            ++sources;
            CHECK(v == 0);
        }
    }
    CHECK(sources == 1);
    CHECK(oracle.probe_count() == 3);
}

TEST_CASE("memoization soundness: count equals distinct edges in any sequence") {
    const auto inst = gen_er(24, 0.4, 99);
    probe_oracle oracle = inst.make_oracle();
    std::mt19937_64 rng(7);
    const auto& edges = inst.graph.edges();
    REQUIRE(!edges.empty());

    std::vector<char> touched(edges.size(), 0);
    long distinct = 0;
    for (int step = 0; step < 500; ++step) {
        const auto idx = rng() % edges.size();
        auto [u, v] = edges[idx];
        if (rng() % 2) std::swap(u, v);
        oracle.probe(u, v);
        if (!touched[idx]) {
            touched[idx] = 1;
            ++distinct;
        }
        CHECK(oracle.probe_count() == distinct);
    }
    CHECK(oracle.probe_calls() == 500);
}

TEST_CASE("oracle consistency: probe(u,v) + probe(v,u) == 1 on every edge") {
    const auto inst = gen_er(20, 0.5, 3);
    probe_oracle oracle = inst.make_oracle();
    for (auto [u, v] : inst.graph.edges()) {
        CHECK(int(oracle.probe(u, v)) + int(oracle.probe(v, u)) == 1);
    }
    // and the cache always agrees with the truth
    for (auto [u, v] : inst.graph.edges()) {
        CHECK(oracle.cache().precedes(u, v) == inst.truth.precedes(u, v));
    }
}

TEST_CASE("generated truths are acyclic") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = gen_er(16, 0.5, seed);
        const auto store = store_from_truth(inst.graph, inst.truth);
        CHECK(validate_orientation(inst.graph, store).acyclic);
    }
}

TEST_CASE("load_graph parses the documented format") {
    std::istringstream in("3 2\n0 1\n1 2\n");
    const auto g = load_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("load_graph accepts comments and reports malformed input") {
    std::istringstream ok("# generated\n3 1\n# data\n0 2\n");
    CHECK(load_graph(ok).has_edge(0, 2));

    std::istringstream loop("2 1\n0 0\n");
    CHECK_THROWS_AS(load_graph(loop), self_loop);

    std::istringstream dup("2 2\n0 1\n0 1\n");
    CHECK_THROWS_AS(load_graph(dup), duplicate_edge);

    std::istringstream swapped("2 1\n1 0\n");
    CHECK_THROWS_AS(load_graph(swapped), parse_error);

    std::istringstream range("2 1\n0 5\n");
    CHECK_THROWS_AS(load_graph(range), parse_error);

    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(load_graph(truncated), parse_error);

    std::istringstream trailing("2 1\n0 1\n0 1\n");
    CHECK_THROWS_AS(load_graph(trailing), parse_error);

    std::istringstream junk("2 1\n0 1 9\n");
    CHECK_THROWS_AS(load_graph(junk), parse_error);

    try {
        std::istringstream again("2 2\n0 1\n0 1\n");
        load_graph(again);
        FAIL("expected duplicate_edge");
    } catch (const duplicate_edge& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("complement covers every pair exactly once") {
    SUBCASE("complete graph has an empty complement") {
        CHECK(complement(complete_graph(4)).graph.edge_count() == 0);
    }
    SUBCASE("empty graph complements to the complete graph") {
        const auto h = complement(make_graph(3, {}));
        CHECK(h.graph.edge_count() == 3);
    }
    SUBCASE("path 0-1-2 complements to the single edge {0,2}") {
        const auto h = complement(path_graph(3));
        REQUIRE(h.graph.edge_count() == 1);
        CHECK(h.graph.has_edge(0, 2));
    }
    SUBCASE("partition property on a random graph") {
        const auto inst = gen_er(18, 0.4, 5);
        const auto h = complement(inst.graph);
        for (int u = 0; u < 18; ++u) {
            for (int v = u + 1; v < 18; ++v) {
                CHECK(inst.graph.has_edge(u, v) != h.graph.has_edge(u, v));
            }
        }
    }
}

TEST_CASE("reachable follows directed paths only") {
    scaffold_graph a(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    CHECK(reachable(a, 0, 2));
    CHECK(reachable(a, 1, 1));

    scaffold_graph b(2);
    b.add_edge(0, 1);
    CHECK(!reachable(b, 1, 0));
}

TEST_CASE("shortcut edges do not change reachability") {
    scaffold_graph chain(10);
    for (int v = 0; v + 1 < 10; ++v) chain.add_edge(v, v + 1);
    scaffold_graph with_shortcut(10);
    for (int v = 0; v + 1 < 10; ++v) with_shortcut.add_edge(v, v + 1);
    with_shortcut.add_edge(2, 7);

    CHECK(reachable(chain, 0, 9));
    CHECK(reachable(with_shortcut, 0, 9));
    const auto ma = closure_matrix(10, chain.edges());
    const auto mb = closure_matrix(10, with_shortcut.edges());
    CHECK(ma == mb);
}

TEST_CASE("reachable agrees with the closure matrix on random DAGs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);  // n <= 8
        scaffold_graph a(n);
        std::vector<std::pair<int, int>> directed;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) {  // edges along increasing ids: acyclic
                    a.add_edge(u, v);
                    directed.emplace_back(u, v);
                }
            }
        }
        const auto matrix = closure_matrix(n, directed);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                CHECK(reachable(a, u, v) == static_cast<bool>(matrix[u][v]));
            }
        }
        // transitive_closure rows match too
        const auto rows = transitive_closure(a);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                CHECK(static_cast<bool>(rows[u][v / 64] >> (v % 64) & 1) ==
                      static_cast<bool>(matrix[u][v]));
            }
        }
    }
}

TEST_CASE("validate_orientation reports completeness and acyclicity") {
    const auto g = complete_graph(3);

    orientation_store good(3);
    good.record(0, 1);
    good.record(1, 2);
    good.record(0, 2);
    CHECK(validate_orientation(g, good).complete);
    CHECK(validate_orientation(g, good).acyclic);

    orientation_store cyc(3);
    cyc.record(0, 1);
    cyc.record(1, 2);
    cyc.record(2, 0);
    CHECK(validate_orientation(g, cyc).complete);
    CHECK(!validate_orientation(g, cyc).acyclic);

    orientation_store partial(3);
    partial.record(0, 1);
    partial.record(1, 2);
    const auto report = validate_orientation(g, partial);
    CHECK(!report.complete);
    CHECK(report.missing == 1);
}

TEST_CASE("orientation store keeps one direction per edge") {
    orientation_store store(4);
    store.record(2, 1);
    CHECK(store.known(1, 2));
    CHECK(store.precedes(2, 1));
    CHECK(!store.precedes(1, 2));
    store.record(2, 1);  // same direction again is fine
    CHECK(store.known_count() == 1);
    CHECK_THROWS_AS(store.record(1, 2), internal_error);
    CHECK_THROWS_AS(store.precedes(0, 3), precondition_violated);
}

TEST_CASE("all_edges_known_within looks only inside the subset") {
    const auto g = complete_graph(4);
    orientation_store store(4);
    store.record(0, 1);
    store.record(0, 2);
    store.record(1, 2);
    const std::vector<int> subset{0, 1, 2};
    CHECK(store.all_edges_known_within(g, subset));
    CHECK(!store.all_edges_known(g));
}

TEST_CASE("file round trips preserve every artifact") {
    const auto inst = gen_er(15, 0.45, 21);

    std::ostringstream gout;
    save_graph(gout, inst.graph, "round trip");
    std::istringstream gin(gout.str());
    CHECK(load_graph(gin) == inst.graph);

    std::ostringstream tout;
    save_order(tout, inst.truth.order());
    std::istringstream tin(tout.str());
    CHECK(load_order(tin, 15) == inst.truth.order());

    const auto store = store_from_truth(inst.graph, inst.truth);
    std::ostringstream oout;
    save_orientation(oout, inst.graph, store);
    std::istringstream oin(oout.str());
    const auto directed = load_orientation(oin, 15);
    CHECK(directed == store.directed_edges(inst.graph));

    coloring c;
    c.color = {1, 2, 1, 3};
    c.num_colors = 3;
    std::ostringstream cout_;
    save_coloring(cout_, c);
    std::istringstream cin_(cout_.str());
    const auto c2 = load_coloring(cin_, 4);
    CHECK(c2.color == c.color);
    CHECK(c2.num_colors == 3);
}

TEST_CASE("has_edge works past the dense-bits size cap") {
    // above 8192 vertices adjacency falls back to binary search
    const int n = 9000;
    const auto g = make_graph(n, {{0, 1}, {5, 8999}, {42, 4242}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(8999, 5));
    CHECK(g.has_edge(42, 4242));
    CHECK(!g.has_edge(0, 2));
    CHECK(!g.has_edge(6, 8999));
}

TEST_CASE("order files must hold a permutation") {
    std::istringstream dup("0 0 1\n");
    CHECK_THROWS_AS(load_order(dup, 3), parse_error);
    std::istringstream range("0 1 7\n");
    CHECK_THROWS_AS(load_order(range, 3), parse_error);
    std::istringstream size("0 1\n");
    CHECK_THROWS_AS(load_order(size, 3), parse_error);
}
