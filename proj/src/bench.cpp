#include "probesort/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include "probesort/analysis.hpp"
#include "probesort/colorsolve.hpp"
#include "probesort/errors.hpp"
#include "probesort/solvers.hpp"
#include "probesort/verify.hpp"

namespace probesort {

namespace {

struct solve_outcome {
    orientation_store store;
    int k_used = 0;
};

solve_outcome run_algo(const bench_task& task, const instance& inst,
                       probe_oracle& oracle) {
    solve_outcome out;
    if (task.algo == "brute") {
        out.store = brute_force_solve(oracle, inst.graph);
    } else if (task.algo == "colorsolve") {
        const coloring c = greedy_coloring(complement(inst.graph));
        out.store = color_solve(oracle, inst.graph, c);
        out.k_used = c.num_colors;
    } else if (task.algo == "cliquesolve") {
        clique_solve_stats stats;
        out.store = clique_solve(oracle, inst.graph, estimate_k(inst.graph).k, &stats);
        out.k_used = stats.k_final;
    } else if (task.algo == "hybrid") {
        hybrid_options opts;
        if (task.spec.model == instance_model::er ||
            task.spec.model == instance_model::stochastic) {
            opts.p_hint = task.spec.p;  // the model density is known here
        }
        hybrid_info info;
        out.store = hybrid_solve(oracle, inst.graph, opts, &info);
        out.k_used = info.k_used;
    } else {
        throw precondition_violated("unknown algorithm '" + task.algo + "'");
    }
    return out;
}

}  // namespace

std::vector<bench_record> run_bench(std::span<const bench_task> tasks) {
    std::vector<bench_record> records;
    records.reserve(tasks.size());
    for (const bench_task& task : tasks) {
        bench_record row;
        row.algo = task.algo;
        row.n = task.spec.n;
        row.p = task.spec.p;
        row.seed = task.spec.seed;
        try {
            const instance inst = generate(task.spec);
            row.edges = inst.graph.edge_count();
            probe_oracle oracle = inst.make_oracle();

            const auto start = std::chrono::steady_clock::now();
            const solve_outcome out = run_algo(task, inst, oracle);
            const auto stop = std::chrono::steady_clock::now();

            row.wall_ms =
                std::chrono::duration<double, std::milli>(stop - start).count();
            row.probes = oracle.probe_count();
            row.k_used = out.k_used;
            const auto report = validate_orientation(inst.graph, out.store);
            row.correct = report.ok() &&
                          verify(inst.graph, inst.truth,
                                 out.store.directed_edges(inst.graph))
                              .ok();
        } catch (const std::exception&) {
            row.correct = false;  // the sweep keeps going
        }
        records.push_back(std::move(row));
    }
    return records;
}

void write_csv(std::ostream& out, std::span<const bench_record> records) {
    out << "algo,n,p,seed,k_used,probes,edges,correct,wall_ms\n";
    char buf[64];
    for (const bench_record& r : records) {
        std::snprintf(buf, sizeof buf, "%g", r.p);
        out << r.algo << ',' << r.n << ',' << buf << ',' << r.seed << ',' << r.k_used
            << ',' << r.probes << ',' << r.edges << ',' << (r.correct ? 1 : 0) << ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
        out << buf << '\n';
    }
}

}  // namespace probesort
