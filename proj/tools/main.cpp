// Command line front end: generate instances, run the solvers, verify
// orientation files, and sweep probe-count benchmarks to CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "probesort/analysis.hpp"
#include "probesort/bench.hpp"
#include "probesort/colorsolve.hpp"
#include "probesort/errors.hpp"
#include "probesort/generators.hpp"
#include "probesort/io.hpp"
#include "probesort/solvers.hpp"
#include "probesort/verify.hpp"

namespace {

using namespace probesort;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    return out;
}

struct generate_args {
    std::string model = "er";
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string graph_path;
    std::string order_path;
};

int run_generate(const generate_args& args) {
    instance_spec spec;
    spec.model = model_from_string(args.model);
    spec.n = args.n;
    spec.p = args.p;
    spec.seed = args.seed;
    const instance inst = generate(spec);

    std::ostringstream meta;
    meta << "model=" << args.model << " n=" << args.n;
    if (spec.model != instance_model::nutsbolts) meta << " p=" << args.p;
    meta << " seed=" << args.seed;

    auto gout = open_output(args.graph_path);
    save_graph(gout, inst.graph, meta.str());
    auto tout = open_output(args.order_path);
    save_order(tout, inst.truth.order());
    std::cerr << "wrote " << args.graph_path << " (" << inst.graph.edge_count()
              << " edges) and " << args.order_path << "\n";
    return 0;
}

struct solve_args {
    std::string algo;
    std::string graph_path;
    std::string order_path;
    std::string out_path;
    std::optional<int> k;
    std::string coloring_path;
    std::optional<double> p;
    double threshold_scale = 1.0;
};

int run_solve(const solve_args& args) {
    auto gin = open_input(args.graph_path);
    const comparison_graph g = load_graph(gin);
    auto tin = open_input(args.order_path);
    const ground_truth truth(g.vertex_count(), load_order(tin, g.vertex_count()));
    probe_oracle oracle(g, truth);

    orientation_store store;
    if (args.algo == "brute") {
        store = brute_force_solve(oracle, g);
    } else if (args.algo == "colorsolve") {
        coloring c;
        if (!args.coloring_path.empty()) {
            auto cin_ = open_input(args.coloring_path);
            c = load_coloring(cin_, g.vertex_count());
        } else {
            c = greedy_coloring(complement(g));
        }
        store = color_solve(oracle, g, c);
    } else if (args.algo == "cliquesolve") {
        const int k = args.k ? *args.k : estimate_k(g).k;
        store = clique_solve(oracle, g, k);
    } else if (args.algo == "hybrid") {
        hybrid_options opts;
        opts.p_hint = args.p;
        opts.threshold_scale = args.threshold_scale;
        store = hybrid_solve(oracle, g, opts);
    } else {
        throw error("unknown algorithm '" + args.algo + "'");
    }

    if (!args.out_path.empty()) {
        auto oout = open_output(args.out_path);
        save_orientation(oout, g, store);
    }
    std::cout << "probes=" << oracle.probe_count() << "\n";
    return 0;
}

struct verify_args {
    std::string graph_path;
    std::string order_path;
    std::string dag_path;
};

int run_verify(const verify_args& args) {
    auto gin = open_input(args.graph_path);
    const comparison_graph g = load_graph(gin);
    auto tin = open_input(args.order_path);
    const ground_truth truth(g.vertex_count(), load_order(tin, g.vertex_count()));
    auto din = open_input(args.dag_path);
    const auto directed = load_orientation(din, g.vertex_count());

    const verify_report report = verify(g, truth, directed);
    std::cout << "complete=" << (report.complete ? "yes" : "no")
              << " acyclic=" << (report.acyclic ? "yes" : "no")
              << " matches_order=" << (report.matches_truth ? "yes" : "no") << "\n";
    if (report.missing) std::cout << "missing_edges=" << report.missing << "\n";
    if (report.extra) std::cout << "extra_pairs=" << report.extra << "\n";
    if (!report.flipped.empty()) {
        std::cout << "flipped=" << report.flipped.size() << ":";
        std::size_t shown = 0;
        for (auto [u, v] : report.flipped) {
            if (++shown > 10) {
                std::cout << " ...";
                break;
            }
            std::cout << " " << u << "->" << v;
        }
        std::cout << "\n";
    }
    return report.ok() ? 0 : 1;
}

struct bench_args {
    std::string model = "er";
    std::vector<int> n_list;
    std::vector<double> p_list{0.5};
    int trials = 1;
    std::vector<std::string> algos{"cliquesolve"};
    std::string csv_path;
};

int run_bench_cmd(const bench_args& args) {
    const instance_model model = model_from_string(args.model);
    std::vector<bench_task> tasks;
    for (int n : args.n_list) {
        for (double p : args.p_list) {
            for (const std::string& algo : args.algos) {
                for (int trial = 1; trial <= args.trials; ++trial) {
                    bench_task task;
                    task.spec = {model, n, p, static_cast<std::uint64_t>(trial)};
                    task.algo = algo;
                    tasks.push_back(std::move(task));
                }
            }
        }
    }
    const auto records = run_bench(tasks);
    if (args.csv_path.empty()) {
        write_csv(std::cout, records);
    } else {
        auto out = open_output(args.csv_path);
        write_csv(out, records);
        std::cerr << "wrote " << records.size() << " rows to " << args.csv_path << "\n";
    }
    for (const auto& r : records) {
        if (!r.correct) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized sorting: recover a hidden acyclic orientation "
                 "with few probes"};
    app.require_subcommand(1);

    generate_args gen;
    auto* cmd_gen = app.add_subcommand("generate", "write a random instance");
    cmd_gen->add_option("--model", gen.model, "er | nutsbolts | stochastic")
        ->check(CLI::IsMember({"er", "nutsbolts", "stochastic"}));
    cmd_gen->add_option("--n", gen.n, "vertex count")->required();
    cmd_gen->add_option("--p", gen.p, "edge probability");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed");
    cmd_gen->add_option("--out", gen.graph_path, "graph file")->required();
    cmd_gen->add_option("--order", gen.order_path, "hidden order file")->required();

    solve_args sol;
    auto* cmd_solve = app.add_subcommand("solve", "orient every edge; prints probes=<n>");
    cmd_solve->add_option("--algo", sol.algo, "colorsolve | cliquesolve | brute | hybrid")
        ->required()
        ->check(CLI::IsMember({"colorsolve", "cliquesolve", "brute", "hybrid"}));
    cmd_solve->add_option("--graph", sol.graph_path)->required();
    cmd_solve->add_option("--order", sol.order_path)->required();
    cmd_solve->add_option("--k", sol.k, "clique bound for cliquesolve");
    cmd_solve->add_option("--coloring", sol.coloring_path, "coloring file for colorsolve");
    cmd_solve->add_option("--p", sol.p, "density hint for hybrid");
    cmd_solve->add_option("--threshold-scale", sol.threshold_scale,
                          "scales hybrid's ln(n)/sqrt(n) cutoff");
    cmd_solve->add_option("--out", sol.out_path, "orientation output file");

    verify_args ver;
    auto* cmd_verify = app.add_subcommand("verify", "check an orientation file");
    cmd_verify->add_option("--graph", ver.graph_path)->required();
    cmd_verify->add_option("--order", ver.order_path)->required();
    cmd_verify->add_option("--dag", ver.dag_path)->required();

    bench_args ben;
    auto* cmd_bench = app.add_subcommand("bench", "probe-count sweep to CSV");
    cmd_bench->add_option("--model", ben.model, "er | nutsbolts | stochastic")
        ->check(CLI::IsMember({"er", "nutsbolts", "stochastic"}));
    cmd_bench->add_option("--n-list", ben.n_list, "vertex counts")
        ->required()
        ->delimiter(',');
    cmd_bench->add_option("--p-list", ben.p_list, "edge probabilities")->delimiter(',');
    cmd_bench->add_option("--trials", ben.trials, "seeds 1..trials per cell");
    cmd_bench->add_option("--algo", ben.algos,
                          "colorsolve | cliquesolve | brute | hybrid")
        ->delimiter(',');
    cmd_bench->add_option("--csv", ben.csv_path, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_solve->parsed()) return run_solve(sol);
        if (cmd_verify->parsed()) return run_verify(ver);
        if (cmd_bench->parsed()) return run_bench_cmd(ben);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
