#ifndef PROBESORT_BENCH_HPP
#define PROBESORT_BENCH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "probesort/generators.hpp"

namespace probesort {

struct bench_record {
    std::string algo;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int k_used = 0;
    long probes = 0;
    std::size_t edges = 0;
    bool correct = false;
    double wall_ms = 0.0;
};

struct bench_task {
    instance_spec spec;
    std::string algo;  // colorsolve | cliquesolve | brute | hybrid
};

/// Runs every task with a fresh instance and oracle, verifying each result
/// against the hidden order. A failing row gets correct=false; the sweep
/// never aborts. Rows come back in task order.
std::vector<bench_record> run_bench(std::span<const bench_task> tasks);

/// Header "algo,n,p,seed,k_used,probes,edges,correct,wall_ms" plus one row
/// per record.
void write_csv(std::ostream& out, std::span<const bench_record> records);

}  // namespace probesort

#endif
