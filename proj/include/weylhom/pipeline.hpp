#pragma once

#include "weylhom/homology.hpp"
#include "weylhom/parallel.hpp"
#include "weylhom/verify.hpp"

#include <vector>

namespace weylhom {

struct ComputeOptions {
    std::vector<long long> primes;  // empty: all primes <= max component rank
    int threads = 0;
    bool large_ok = false;
};

struct ComputeResult {
    RootSystem system;
    std::vector<WeylElement> group;
    std::vector<WeightComponent> components;
    std::vector<HomologyReport> reports;  // chain direction, one per component
    std::vector<long long> primes;
    GlobalSummary summary;
};

inline ComputeResult run_compute(DynkinType type, int rank, const ComputeOptions& opts = {}) {
    ComputeResult res;
    res.system = build_root_system(type, rank, opts.large_ok);
    res.group = enumerate_weyl_group(res.system, weyl_order(type, rank));

    const bool large = res.system.num_roots() >= 22;
    DecomposeOptions dopts;
    dopts.with_edges = !large;
    res.components = decompose(res.system, dopts);

    if (large)
        parallel_for(res.components.size(),
                     [&](std::size_t i) { build_edges(res.system, res.components[i]); },
                     opts.threads);

    res.primes = opts.primes;
    if (res.primes.empty()) {
        int max_rank = 0;
        for (const auto& c : res.components) max_rank = std::max(max_rank, c.rank);
        res.primes = default_primes(max_rank);
    }

    res.reports.resize(res.components.size());
    parallel_for(
        res.components.size(),
        [&](std::size_t i) {
            auto cx = build_complex(res.system, res.components[i], Direction::chain);
            res.reports[i] = homology_of(cx, res.primes);
            if (large) {
                res.components[i].edges.clear();
                res.components[i].edges.shrink_to_fit();
            }
        },
        opts.threads);

    res.summary = global_summary(res.system, res.group, res.reports, false);
    return res;
}

}  // namespace weylhom
