#pragma once

/*
 * Whole-system verification: runs every structural check the library's
 * theorems promise, component by component, and reports one named result per
 * check with a minimal counterexample on failure.
 */

#include "weylhom/an_combinatorics.hpp"
#include "weylhom/basis_graph.hpp"
#include "weylhom/homology.hpp"
#include "weylhom/parallel.hpp"
#include "weylhom/weight_complex.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace weylhom {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string details;  // first counterexample, or a short summary
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int action_samples = 10000;
    int threads = 0;
    std::uint64_t seed = 0x77e71;
    bool type_a_suite = true;  // run the combinatorial tuple checks on type A
};

inline VerificationReport verify_system(const RootSystem& sys, const VerifyOptions& opts = {}) {
    VerificationReport rep;
    const int N = sys.num_roots();
    auto add = [&](const std::string& name, bool pass, const std::string& details) {
        rep.checks.push_back({name, pass, details});
    };

    const auto group = enumerate_weyl_group(sys, weyl_order(sys.dynkin_type, sys.rank));
    auto comps = decompose(sys);

    // --- per-component structure -------------------------------------------
    std::vector<ComponentCheck> checks(comps.size());
    parallel_for(comps.size(), [&](std::size_t i) { checks[i] = verify_component(sys, comps[i]); },
                 opts.threads);

    auto aggregate = [&](const std::string& name, bool ComponentCheck::*field) {
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (!(checks[i].*field)) {
                add(name, false, checks[i].counterexample);
                return;
            }
        add(name, true, std::to_string(comps.size()) + " components");
    };
    aggregate("triangle-free", &ComponentCheck::no_triangles);
    aggregate("diamond-completion-unique", &ComponentCheck::diamond_unique);
    aggregate("components-connected", &ComponentCheck::connected);
    aggregate("neighbor-count-uniform", &ComponentCheck::uniform_rank);
    aggregate("sign-admissible-on-diamonds", &ComponentCheck::admissible);
    aggregate("index-neighbor-property", &ComponentCheck::neighbor_property);

    // partition sanity: every subset in exactly one component
    {
        unsigned long long total = 0;
        for (const auto& c : comps) total += c.vertices.size();
        const unsigned long long expect = 1ull << N;
        add("subset-partition", total == expect,
            std::to_string(total) + " vertices across components, expected 2^" +
                std::to_string(N));
    }

    // --- complexes: d^2 = 0, Laplacian, homology ----------------------------
    std::vector<HomologyReport> chain_reports(comps.size());
    std::vector<HomologyReport> cochain_reports(comps.size());
    std::string square_fail, laplacian_fail;
    int max_rank = 0;
    for (const auto& c : comps) max_rank = std::max(max_rank, c.rank);
    const auto primes = default_primes(max_rank);

    parallel_for(
        comps.size(),
        [&](std::size_t i) {
            try {
                auto cx = build_complex(sys, comps[i], Direction::chain);
                int bad_deg = 0;
                if (!laplacian_check(cx, comps[i].rank, &bad_deg) && laplacian_fail.empty())
                    laplacian_fail = "weight " + comps[i].weight.str() + " fails at degree " +
                                     std::to_string(bad_deg);
                chain_reports[i] = homology_of(cx, primes);
                auto cocx = build_complex(sys, comps[i], Direction::cochain);
                cochain_reports[i] = homology_of(cocx, primes);
            } catch (const SquareNotZero& e) {
                if (square_fail.empty()) square_fail = e.what();
            }
        },
        opts.threads);
    add("differential-squares-to-zero", square_fail.empty(), square_fail);
    add("laplacian-identity", square_fail.empty() && laplacian_fail.empty(),
        square_fail.empty() ? laplacian_fail : "skipped: no complex");

    const bool complexes_ok = square_fail.empty();

    // --- duality -------------------------------------------------------------
    if (complexes_ok) {
        std::string fail;
        std::map<WeightKey, std::size_t> index_of_weight;
        for (std::size_t i = 0; i < comps.size(); ++i) index_of_weight[comps[i].weight] = i;
        for (std::size_t i = 0; i < comps.size() && fail.empty(); ++i) {
            auto it = index_of_weight.find(-comps[i].weight);
            if (it == index_of_weight.end()) {
                fail = "no component of weight " + (-comps[i].weight).str();
                break;
            }
            const std::size_t j = it->second;
            try {
                build_duality(sys, comps[i], comps[j]);
            } catch (const Error& e) {
                fail = e.what();
                break;
            }
            // H_k(alpha) = H^{N-k}(-alpha), free rank and torsion multiset
            const auto& ha = chain_reports[i];
            const auto& hb = cochain_reports[j];
            for (int k = ha.d_min; k <= ha.d_max; ++k) {
                const auto* da = ha.at(k);
                const auto* db = hb.at(N - k);
                if (!db || da->free_rank != db->free_rank || da->torsion != db->torsion) {
                    fail = "homology of weight " + comps[i].weight.str() + " at degree " +
                           std::to_string(k) + " does not match the dual cohomology";
                    break;
                }
            }
        }
        add("duality-pairing", fail.empty(), fail);
    } else {
        add("duality-pairing", false, "skipped: no complex");
    }

    // --- global homology vs the Weyl group ----------------------------------
    if (complexes_ok) {
        auto summary = global_summary(sys, group, chain_reports, false);
        std::string detail;
        if (!summary.violations.empty()) detail = summary.violations.front();
        add("free-part-matches-weyl-histogram", summary.violations.empty(), detail);
        // explicit audit per prime
        std::string audit_fail;
        for (long long p : primes)
            for (const auto& entry : vanishing_audit(chain_reports, p))
                if (entry.rank_of_weight % p != 0) {
                    audit_fail = "weight " + entry.weight.str() + " has F_" + std::to_string(p) +
                                 " homology but r = " + std::to_string(entry.rank_of_weight);
                    break;
                }
        add("modp-vanishing-by-rank", audit_fail.empty(), audit_fail);
    } else {
        add("free-part-matches-weyl-histogram", false, "skipped: no complex");
        add("modp-vanishing-by-rank", false, "skipped: no complex");
    }

    // --- singleton characterization ------------------------------------------
    {
        std::set<std::vector<Bigint>> orbit;
        for (const auto& w : group) orbit.insert(apply_to_vector(sys, w, sys.rho).coords());
        std::string fail;
        long long singles = 0;
        for (const auto& c : comps) {
            const bool single = c.vertices.size() == 1;
            if (single) ++singles;
            const bool in_orbit = orbit.count(c.weight.coords()) > 0;
            bool all_indices_nonzero = true;
            for (int e = 0; e < N; ++e)
                if (index_of(sys, sys.root(e), c.weight) == 0) {
                    all_indices_nonzero = false;
                    break;
                }
            const bool rank_zero = c.rank == 0;
            if (fail.empty() &&
                !(single == in_orbit && single == all_indices_nonzero && single == rank_zero))
                fail = "weight " + c.weight.str() + ": singleton=" + std::to_string(single) +
                       " orbit=" + std::to_string(in_orbit) +
                       " indices-nonzero=" + std::to_string(all_indices_nonzero) +
                       " rank-zero=" + std::to_string(rank_zero);
        }
        if (fail.empty() && singles != static_cast<long long>(group.size()))
            fail = std::to_string(singles) + " singletons for |W| = " + std::to_string(group.size());
        add("singleton-characterization", fail.empty(), fail);
    }

    // --- group action laws, sampled -------------------------------------------
    {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick_w(0, group.size() - 1);
        std::uniform_int_distribution<std::uint32_t> pick_mask(0, (N == 32) ? ~0u : (1u << N) - 1);
        std::string fail;
        for (int trial = 0; trial < opts.action_samples && fail.empty(); ++trial) {
            const auto& w = group[pick_w(rng)];
            const auto& w2 = group[pick_w(rng)];
            VertexSubset s{pick_mask(rng)};
            // identity
            if (trial == 0) {
                WeylElement id;
                id.action.resize(N);
                for (int i = 0; i < N; ++i) id.action[i] = static_cast<int16_t>(i + 1);
                if (circ_action(sys, id, s) != s) fail = "identity action moved a vertex";
            }
            // composition
            WeylElement prod;
            prod.action = compose_actions(w2.action, w.action);
            VertexSubset lhs = circ_action(sys, w2, circ_action(sys, w, s));
            VertexSubset rhs = circ_action(sys, prod, s);
            if (lhs != rhs) {
                std::ostringstream o;
                o << "composition law fails on mask 0x" << std::hex << s.bits;
                fail = o.str();
                break;
            }
            // weight equivariance via the reduced words
            WeightKey lw = weight_of(sys, circ_action(sys, w, s));
            WeightKey rw = apply_to_vector(sys, w, weight_of(sys, s));
            if (lw != rw) {
                std::ostringstream o;
                o << "weight equivariance fails on mask 0x" << std::hex << s.bits;
                fail = o.str();
            }
        }
        add("group-action-laws", fail.empty(),
            fail.empty() ? std::to_string(opts.action_samples) + " samples" : fail);
    }

    // --- rank is constant on Weyl orbits ---------------------------------------
    {
        std::string fail;
        std::map<WeightKey, long long> rank_of;
        for (const auto& c : comps) rank_of[c.weight] = c.rank;
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<std::size_t> pick_w(0, group.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_c(0, comps.size() - 1);
        for (int trial = 0; trial < 2000 && fail.empty(); ++trial) {
            const auto& c = comps[pick_c(rng)];
            const auto& w = group[pick_w(rng)];
            WeightKey img = apply_to_vector(sys, w, c.weight);
            auto it = rank_of.find(img);
            if (it == rank_of.end())
                fail = "orbit image " + img.str() + " is not a weight";
            else if (it->second != c.rank)
                fail = "rank changes along the orbit of " + c.weight.str();
        }
        add("rank-constant-on-orbits", fail.empty(), fail);
    }

    // --- type A tuple suite -----------------------------------------------------
    if (sys.dynkin_type == DynkinType::A && opts.type_a_suite) {
        const int n = sys.rank;
        std::string fail;
        // vertexwise translation identity and tuple sum
        detail::for_each_subset_weight(sys, [&](std::uint32_t mask, const detail::PackedWeight&) {
            if (!fail.empty()) return;
            VertexSubset s{mask};
            auto direct = combinatorial_weight_of(sys, s);
            auto translated = weight_translation(n, weight_of(sys, s));
            if (direct != translated) {
                fail = "tuple of mask " + std::to_string(mask) + " is " + tuple_str(direct) +
                       " but the weight translates to " + tuple_str(translated);
                return;
            }
            long long total = 0;
            for (int v : direct) total += v;
            if (total != static_cast<long long>(n) * (n + 1) / 2)
                fail = "tuple sum is " + std::to_string(total) + " for mask " +
                       std::to_string(mask);
        });
        add("typeA-weight-translation", fail.empty(), fail);

        std::map<CombinatorialWeight, long long> ranks;
        for (const auto& c : comps) ranks[weight_translation(n, c.weight)] = c.rank;

        std::vector<RankRecursionFailure> failures;
        const bool rec_ok = rank_recursion_check(ranks, &failures);
        add("typeA-rank-recursion", rec_ok,
            rec_ok ? std::to_string(ranks.size()) + " tuples"
                   : "move " + tuple_str(failures.front().from) + " -> " +
                         tuple_str(failures.front().to) + " expected rank " +
                         std::to_string(failures.front().expected) + ", got " +
                         std::to_string(failures.front().actual));

        std::string zfail;
        for (const auto& [t, r] : ranks) {
            const bool perm = is_permutation_of_iota(t);
            if ((r == 0) != perm) {
                zfail = "tuple " + tuple_str(t) + " has rank " + std::to_string(r);
                break;
            }
        }
        add("typeA-rank-zero-permutations", zfail.empty(), zfail);

        // permutations of {1,1,2,...,n-2,n-1,n-1} all have rank n-1
        if (n >= 2) {
            CombinatorialWeight base;
            base.push_back(1);
            for (int v = 1; v <= n - 1; ++v) base.push_back(v);
            base.push_back(n - 1);
            std::sort(base.begin(), base.end());
            std::string mfail;
            long long count = 0;
            do {
                auto it = ranks.find(base);
                if (it == ranks.end()) {
                    mfail = "tuple " + tuple_str(base) + " is not a weight";
                    break;
                }
                ++count;
                if (it->second != n - 1) {
                    mfail = "tuple " + tuple_str(base) + " has rank " + std::to_string(it->second);
                    break;
                }
            } while (std::next_permutation(base.begin(), base.end()));
            add("typeA-near-extreme-rank", mfail.empty(),
                mfail.empty() ? std::to_string(count) + " permutations of rank " +
                                    std::to_string(n - 1)
                              : mfail);
        }

        // weight set closed under tuple reversal
        std::string rfail;
        for (const auto& [t, r] : ranks)
            if (!ranks.count(reversal_tuple(n, t))) {
                rfail = "reversal of " + tuple_str(t) + " is not a weight";
                break;
            }
        add("typeA-reversal-closure", rfail.empty(), rfail);
    }

    return rep;
}

}  // namespace weylhom
