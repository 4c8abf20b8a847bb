#include <catch2/catch_amalgamated.hpp>

#include "weylhom/an_combinatorics.hpp"
#include "weylhom/homology.hpp"
#include "weylhom/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace weylhom;

TEST_CASE("combinatorial weight of the empty and full subsets") {
    for (int n : {1, 2, 3}) {
        auto sys = build_root_system(DynkinType::A, n);
        CombinatorialWeight empty = combinatorial_weight_of(sys, {0});
        CombinatorialWeight iota(n + 1);
        for (int k = 0; k <= n; ++k) iota[k] = k;
        REQUIRE(empty == iota);

        VertexSubset full{(1u << sys.num_roots()) - 1};
        CombinatorialWeight top = combinatorial_weight_of(sys, full);
        CombinatorialWeight rev(n + 1);
        for (int k = 0; k <= n; ++k) rev[k] = n - k;
        REQUIRE(top == rev);

        long long sum = 0;
        for (int v : top) sum += v;
        REQUIRE(sum == static_cast<long long>(n) * (n + 1) / 2);
    }
}

TEST_CASE("adding a root subtracts its coordinate vector from the tuple") {
    auto sys = build_root_system(DynkinType::A, 3);
    const std::uint32_t fullmask = (1u << sys.num_roots()) - 1;
    for (std::uint32_t m = 0; m <= fullmask; ++m) {
        VertexSubset s{m};
        auto base = combinatorial_weight_of(sys, s);
        for (int r = 0; r < sys.num_roots(); ++r) {
            if (s.contains(r)) continue;
            auto [i, j] = root_endpoints(sys, r);
            auto next = combinatorial_weight_of(sys, s.with(r));
            auto expect = base;
            expect[i] += 1;
            expect[j] -= 1;
            REQUIRE(next == expect);
        }
    }
}

TEST_CASE("weight translation matches the direct tuple on every vertex") {
    for (int n : {1, 2, 3, 4}) {
        auto sys = build_root_system(DynkinType::A, n);
        const std::uint32_t fullmask = (1u << sys.num_roots()) - 1;
        for (std::uint32_t m = 0; m <= fullmask; ++m) {
            VertexSubset s{m};
            REQUIRE(combinatorial_weight_of(sys, s) ==
                    weight_translation(n, weight_of(sys, s)));
        }
    }
}

TEST_CASE("translation rejects non-integral input") {
    REQUIRE_THROWS_AS(weight_translation(2, ExactVector{1, 0, 1}), NotIntegral);
}

TEST_CASE("translation is injective on the weight set") {
    auto sys = build_root_system(DynkinType::A, 3);
    auto comps = decompose(sys);
    std::set<CombinatorialWeight> seen;
    for (const auto& c : comps) REQUIRE(seen.insert(weight_translation(3, c.weight)).second);
}

namespace {
std::map<CombinatorialWeight, long long> tuple_ranks(DynkinType t, int n) {
    auto sys = build_root_system(t, n);
    std::map<CombinatorialWeight, long long> ranks;
    for (const auto& c : decompose(sys)) ranks[weight_translation(n, c.weight)] = c.rank;
    return ranks;
}
}  // namespace

TEST_CASE("rank recursion holds exhaustively for A2..A4") {
    for (int n : {2, 3, 4}) {
        auto ranks = tuple_ranks(DynkinType::A, n);
        std::vector<RankRecursionFailure> failures;
        INFO("n = " << n);
        REQUIRE(rank_recursion_check(ranks, &failures));
        REQUIRE(failures.empty());
    }
}

TEST_CASE("rank zero tuples are exactly the permutations of 0..n") {
    for (int n : {2, 3, 4}) {
        auto ranks = tuple_ranks(DynkinType::A, n);
        long long zero_count = 0;
        for (const auto& [t, r] : ranks) {
            if (r == 0) ++zero_count;
            REQUIRE((r == 0) == is_permutation_of_iota(t));
        }
        REQUIRE(zero_count == weyl_order(DynkinType::A, n));
    }
}

TEST_CASE("permutations of the near-extreme multiset have rank n-1") {
    // in A_n the multiset {1,1,2,...,n-2,n-1,n-1} replaces {0,...,n}'s
    // extremes; every permutation of it is a weight of rank n-1
    for (int n : {2, 3, 4}) {
        auto ranks = tuple_ranks(DynkinType::A, n);
        CombinatorialWeight base;
        base.push_back(1);
        for (int v = 1; v <= n - 1; ++v) base.push_back(v);
        base.push_back(n - 1);
        std::sort(base.begin(), base.end());
        do {
            auto it = ranks.find(base);
            REQUIRE(it != ranks.end());
            REQUIRE(it->second == n - 1);
        } while (std::next_permutation(base.begin(), base.end()));
    }
}

TEST_CASE("the weight set is closed under reversal and rank is preserved") {
    for (int n : {2, 3}) {
        auto ranks = tuple_ranks(DynkinType::A, n);
        for (const auto& [t, r] : ranks) {
            auto rev = reversal_tuple(n, t);
            auto it = ranks.find(rev);
            REQUIRE(it != ranks.end());
            REQUIRE(it->second == r);
        }
    }
}

namespace {
struct TupleReports {
    std::map<CombinatorialWeight, const HomologyReport*> chain;
    std::map<CombinatorialWeight, const HomologyReport*> cochain;
    std::vector<HomologyReport> cochain_storage;
    ComputeResult res;
};

TupleReports reports_by_tuple(int n) {
    TupleReports out;
    out.res = run_compute(DynkinType::A, n);
    out.cochain_storage.resize(out.res.components.size());
    for (std::size_t i = 0; i < out.res.components.size(); ++i) {
        auto t = weight_translation(n, out.res.components[i].weight);
        out.chain[t] = &out.res.reports[i];
        out.cochain_storage[i] = homology_of(
            build_complex(out.res.system, out.res.components[i], Direction::cochain),
            out.res.primes);
        out.cochain[t] = &out.cochain_storage[i];
    }
    return out;
}

bool same_degree_data(const DegreeHomology* a, const DegreeHomology* b) {
    const bool za = !a || (a->free_rank == 0 && a->torsion.empty());
    const bool zb = !b || (b->free_rank == 0 && b->torsion.empty());
    if (za != zb) return false;
    if (za && zb) return true;
    return a->free_rank == b->free_rank && a->torsion == b->torsion;
}
}  // namespace

TEST_CASE("reflection pairs have identical cohomology reports") {
    for (int n : {2, 3}) {
        auto data = reports_by_tuple(n);
        const int N = n * (n + 1) / 2;
        for (const auto& [t, rep] : data.cochain) {
            const auto* other = data.cochain.at(reversal_tuple(n, t));
            for (int k = 0; k <= N; ++k) REQUIRE(same_degree_data(rep->at(k), other->at(k)));
        }
    }
}

TEST_CASE("rotation pairs match after the degree shift") {
    for (int n : {2, 3}) {
        auto data = reports_by_tuple(n);
        const int N = n * (n + 1) / 2;
        for (const auto& [t, rep] : data.cochain) {
            const auto rot = rotation_tuple(t);
            const int shift = rotation_degree_shift(n, t);
            const auto* other = data.cochain.at(rot);
            for (int k = -N; k <= 2 * N; ++k)
                REQUIRE(same_degree_data(rep->at(k), other->at(k + shift)));
        }
    }
}

TEST_CASE("duality pairs relate cochain reports to chain reports") {
    for (int n : {2, 3}) {
        auto data = reports_by_tuple(n);
        const int N = n * (n + 1) / 2;
        for (const auto& [t, rep] : data.chain) {
            const auto* other = data.cochain.at(duality_tuple(n, t));
            for (int k = 0; k <= N; ++k) REQUIRE(same_degree_data(rep->at(k), other->at(N - k)));
        }
    }
}
