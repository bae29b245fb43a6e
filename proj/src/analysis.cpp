#include "probesort/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "probesort/errors.hpp"

namespace probesort {

namespace {

void seeded_shuffle(std::vector<int>& v, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng() % i]);
    }
}

// Branch and bound for maximum clique on <= 64 vertices, with a greedy
// coloring bound (candidates colored per level; a vertex of color c can
// extend the current clique to at most size+c).
class clique_search {
public:
    explicit clique_search(const comparison_graph& h) : n_(h.vertex_count()) {
        adj_.fill(0);
        for (auto [u, v] : h.edges()) {
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
    }

    std::uint64_t run() {
        if (n_ == 0) return 0;
        best_size_ = 1;
        best_ = std::uint64_t{1} << 0;
        const std::uint64_t all =
            n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        expand(0, 0, all);
        return best_;
    }

    int best_size() const { return best_size_; }

private:
    void expand(std::uint64_t clique, int size, std::uint64_t cands) {
        // color the candidates greedily; seq holds them by ascending color
        std::array<int, 64> seq, seq_color;
        int count = 0;
        std::uint64_t uncolored = cands;
        for (int c = 1; uncolored; ++c) {
            std::uint64_t eligible = uncolored;
            while (eligible) {
                const int v = std::countr_zero(eligible);
                seq[count] = v;
                seq_color[count] = c;
                ++count;
                uncolored &= ~(std::uint64_t{1} << v);
                eligible &= ~(std::uint64_t{1} << v);
                eligible &= ~adj_[v];
            }
        }
        std::uint64_t pool = cands;
        for (int i = count - 1; i >= 0; --i) {
            if (size + seq_color[i] <= best_size_) return;  // colors only shrink leftwards
            const int v = seq[i];
            const std::uint64_t vbit = std::uint64_t{1} << v;
            pool &= ~vbit;
            const std::uint64_t next = pool & adj_[v];
            if (size + 1 > best_size_) {
                best_size_ = size + 1;
                best_ = clique | vbit;
            }
            if (next) expand(clique | vbit, size + 1, next);
        }
    }

    int n_;
    std::array<std::uint64_t, 64> adj_;
    int best_size_ = 0;
    std::uint64_t best_ = 0;
};

}  // namespace

coloring greedy_coloring(const forbidden_graph& h, std::uint64_t order_seed) {
    const comparison_graph& graph = h.graph;
    const int n = graph.vertex_count();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    seeded_shuffle(order, order_seed);
    std::stable_sort(order.begin(), order.end(), [&graph](int a, int b) {
        return graph.degree(a) > graph.degree(b);
    });

    coloring c;
    c.color.assign(n, 0);
    std::vector<char> used;
    for (int v : order) {
        used.assign(c.num_colors + 2, 0);
        for (int w : graph.neighbors(v)) {
            if (c.color[w] > 0) used[c.color[w]] = 1;
        }
        int f = 1;
        while (used[f]) ++f;
        c.color[v] = f;
        c.num_colors = std::max(c.num_colors, f);
    }
    if (n > 0 && c.num_colors == 0) c.num_colors = 1;
    return c;
}

int max_clique_exact(const forbidden_graph& h, int size_limit,
                     std::vector<int>* witness) {
    const int n = h.graph.vertex_count();
    if (size_limit > 64) size_limit = 64;
    if (n > size_limit) {
        throw too_large("exact clique search is capped at " +
                        std::to_string(size_limit) + " vertices, got " +
                        std::to_string(n));
    }
    if (n == 0) {
        if (witness) witness->clear();
        return 0;
    }
    clique_search search(h.graph);
    const std::uint64_t mask = search.run();
    if (witness) {
        witness->clear();
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) witness->push_back(v);
        }
    }
    return search.best_size();
}

std::vector<int> greedy_independent_set(const comparison_graph& g) {
    const int n = g.vertex_count();
    std::vector<int> chosen;
    std::vector<char> blocked(n, 0);
    for (int v = 0; v < n; ++v) {
        if (blocked[v]) continue;
        chosen.push_back(v);
        for (int w : g.neighbors(v)) blocked[w] = 1;
    }
    return chosen;
}

param_estimate estimate_k(const comparison_graph& g) {
    param_estimate est;
    if (g.vertex_count() <= 64) {
        est.method = estimate_method::exact;
        est.k = max_clique_exact(complement(g), 64, &est.witness) + 1;
    } else {
        est.method = estimate_method::greedy;
        est.witness = greedy_independent_set(g);
        est.k = static_cast<int>(est.witness.size()) + 1;
    }
    est.k = std::max(est.k, 2);
    return est;
}

}  // namespace probesort
