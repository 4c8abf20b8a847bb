// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 invokes the CLI found in $WEYLHOM_CLI.

#include "weylhom/an_combinatorics.hpp"
#include "weylhom/pipeline.hpp"
#include "weylhom/report.hpp"
#include "weylhom/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace weylhom;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

struct SystemData {
    DynkinType type;
    int rank;
    ComputeResult res;
    std::vector<HomologyReport> cochain_reports;
};

const std::vector<std::pair<DynkinType, int>> kSystems = {
    {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4},
    {DynkinType::B, 2}, {DynkinType::B, 3}, {DynkinType::G2, 2},
};

std::string sysname(DynkinType t, int r) { return type_name(t) + std::to_string(r); }

}  // namespace

int main() {
    std::vector<SystemData> data;

    // ---- criterion 1: Kostant free part, with runtime bound ----------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (auto [t, r] : kSystems) {
            SystemData d;
            d.type = t;
            d.rank = r;
            d.res = run_compute(t, r);
            d.cochain_reports.resize(d.res.components.size());
            for (std::size_t i = 0; i < d.res.components.size(); ++i)
                d.cochain_reports[i] = homology_of(
                    build_complex(d.res.system, d.res.components[i], Direction::cochain),
                    d.res.primes);
            if (d.res.summary.betti != d.res.summary.weyl_histogram && detail.empty()) {
                ok = false;
                detail = sysname(t, r) + " free ranks do not match the Weyl histogram";
            }
            data.push_back(std::move(d));
        }
        const auto pinned = std::map<std::string, std::vector<long long>>{
            {"A2", {1, 2, 2, 1}},
            {"A3", {1, 3, 5, 6, 5, 3, 1}},
            {"G22", {1, 2, 2, 2, 2, 2, 1}},
        };
        for (const auto& d : data) {
            auto it = pinned.find(sysname(d.type, d.rank));
            if (it != pinned.end() && d.res.summary.betti != it->second) {
                ok = false;
                detail = it->first + " does not match the pinned free ranks";
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= 5.0) {
            ok = false;
            detail = "runtime " + std::to_string(secs) + "s exceeds 5s";
        }
        std::ostringstream os;
        os << "computed in " << secs << "s";
        report(1, "free ranks equal Weyl length histogram (A2 A3 A4 B2 B3 G2)", ok,
               ok ? os.str() : detail);
    }

    // ---- criterion 2: mod-p vanishing --------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& d : data)
            for (long long p : d.res.primes)
                for (const auto& e : vanishing_audit(d.res.reports, p))
                    if (e.rank_of_weight % p != 0 && ok) {
                        ok = false;
                        detail = sysname(d.type, d.rank) + " weight " + e.weight.str() +
                                 " has F_" + std::to_string(p) + " homology with rank " +
                                 std::to_string(e.rank_of_weight);
                    }
        report(2, "nonzero mod-p homology only where p divides the rank", ok, detail);
    }

    // ---- criterion 3: Laplacian identity ------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& d : data)
            for (const auto& c : d.res.components) {
                auto cx = build_complex(d.res.system, c, Direction::chain);
                int bad = 0;
                if (!laplacian_check(cx, c.rank, &bad) && ok) {
                    ok = false;
                    detail = sysname(d.type, d.rank) + " weight " + c.weight.str() +
                             " fails at degree " + std::to_string(bad);
                }
            }
        report(3, "graph Laplacian equals rank times identity on every component", ok, detail);
    }

    // ---- criterion 4: structural suite --------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& d : data)
            for (const auto& c : d.res.components) {
                auto check = verify_component(d.res.system, c);
                if (!check.ok() && ok) {
                    ok = false;
                    detail = sysname(d.type, d.rank) + ": " + check.counterexample;
                }
            }
        report(4, "diamond uniqueness, connectivity, admissibility, uniform rank, neighbors", ok,
               detail);
    }

    // ---- criterion 5: singleton counts ---------------------------------------
    {
        const std::map<std::string, long long> expect = {{"A2", 6},  {"A3", 24},  {"B2", 8},
                                                         {"G22", 12}, {"B3", 48}, {"A4", 120}};
        bool ok = true;
        std::string detail;
        for (const auto& d : data) {
            long long singles = 0;
            for (const auto& c : d.res.components)
                if (c.vertices.size() == 1) ++singles;
            const auto it = expect.find(sysname(d.type, d.rank));
            if (it != expect.end() && singles != it->second) {
                ok = false;
                detail = it->first + " has " + std::to_string(singles) + " singletons, expected " +
                         std::to_string(it->second);
            }
        }
        report(5, "singleton component count equals |W|", ok, detail);
    }

    // ---- criterion 6: duality -------------------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& d : data) {
            const int N = d.res.system.num_roots();
            std::map<WeightKey, std::size_t> by_weight;
            for (std::size_t i = 0; i < d.res.components.size(); ++i)
                by_weight[d.res.components[i].weight] = i;
            for (std::size_t i = 0; i < d.res.components.size(); ++i) {
                const auto& ha = d.res.reports[i];
                auto it = by_weight.find(-d.res.components[i].weight);
                if (it == by_weight.end()) {
                    ok = false;
                    detail = "missing dual weight";
                    break;
                }
                const auto& hb = d.cochain_reports[it->second];
                for (int k = ha.d_min; k <= ha.d_max; ++k) {
                    const auto* a = ha.at(k);
                    const auto* b = hb.at(N - k);
                    if (!b || a->free_rank != b->free_rank || a->torsion != b->torsion) {
                        if (ok)
                            detail = sysname(d.type, d.rank) + " weight " +
                                     d.res.components[i].weight.str() + " degree " +
                                     std::to_string(k);
                        ok = false;
                    }
                }
            }
        }
        report(6, "homology of weight a equals cohomology of -a after the degree flip", ok,
               detail);
    }

    // ---- criterion 7: type A tuple suite ---------------------------------------
    {
        bool ok = true;
        std::string detail;
        // vertexwise translation identity for n <= 5
        for (int n = 1; n <= 5 && ok; ++n) {
            auto sys = build_root_system(DynkinType::A, n);
            const std::uint32_t full = (1u << sys.num_roots()) - 1;
            for (std::uint32_t m = 0; m <= full; ++m) {
                VertexSubset s{m};
                if (combinatorial_weight_of(sys, s) != weight_translation(n, weight_of(sys, s))) {
                    ok = false;
                    detail = "A" + std::to_string(n) + " mask " + std::to_string(m) +
                             ": tuple does not equal weight plus the constant vector";
                    break;
                }
            }
        }
        // rank recursion, rank zero criterion and the near-extreme multiset
        for (int n = 2; n <= 4 && ok; ++n) {
            std::map<CombinatorialWeight, long long> ranks;
            for (const auto& d : data)
                if (d.type == DynkinType::A && d.rank == n)
                    for (const auto& c : d.res.components)
                        ranks[weight_translation(n, c.weight)] = c.rank;
            std::vector<RankRecursionFailure> fails;
            if (!rank_recursion_check(ranks, &fails)) {
                ok = false;
                detail = "A" + std::to_string(n) + " rank recursion: " +
                         tuple_str(fails.front().from) + " -> " + tuple_str(fails.front().to);
                break;
            }
            for (const auto& [t, r] : ranks)
                if ((r == 0) != is_permutation_of_iota(t)) {
                    ok = false;
                    detail = "A" + std::to_string(n) + " rank-zero criterion at " + tuple_str(t);
                    break;
                }
            CombinatorialWeight base;
            base.push_back(1);
            for (int v = 1; v <= n - 1; ++v) base.push_back(v);
            base.push_back(n - 1);
            std::sort(base.begin(), base.end());
            do {
                auto it = ranks.find(base);
                if (it == ranks.end() || it->second != n - 1) {
                    ok = false;
                    detail = "A" + std::to_string(n) + " multiset rank at " + tuple_str(base);
                    break;
                }
            } while (std::next_permutation(base.begin(), base.end()));
        }
        report(7, "type A: tuple translation, rank recursion, rank-zero and multiset ranks", ok,
               detail);
    }

    // ---- criterion 8: group action laws -----------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const auto& d : data) {
            const auto& sys = d.res.system;
            const auto& group = d.res.group;
            const int N = sys.num_roots();
            std::mt19937_64 rng(0xacce97 + N);
            std::uniform_int_distribution<std::size_t> pick_w(0, group.size() - 1);
            std::uniform_int_distribution<std::uint32_t> pick_mask(0, (1u << N) - 1);
            for (int trial = 0; trial < 10000 && ok; ++trial) {
                const auto& w = group[pick_w(rng)];
                const auto& w2 = group[pick_w(rng)];
                VertexSubset s{pick_mask(rng)};
                WeylElement prod;
                prod.action = compose_actions(w2.action, w.action);
                if (circ_action(sys, w2, circ_action(sys, w, s)) != circ_action(sys, prod, s)) {
                    ok = false;
                    detail = sysname(d.type, d.rank) + " composition law";
                }
                if (weight_of(sys, circ_action(sys, w, s)) !=
                    apply_to_vector(sys, w, weight_of(sys, s))) {
                    ok = false;
                    detail = sysname(d.type, d.rank) + " weight equivariance";
                }
                if (trial == 0) {
                    WeylElement id;
                    id.action.resize(N);
                    for (int i = 0; i < N; ++i) id.action[i] = static_cast<int16_t>(i + 1);
                    if (circ_action(sys, id, s) != s) {
                        ok = false;
                        detail = "identity law";
                    }
                }
            }
        }
        report(8, "twisted action laws on 10^4 random triples per system", ok, detail);
    }

    // ---- criterion 9: linear algebra oracle ---------------------------------------
    {
        bool ok = true;
        std::string detail;
        std::mt19937 rng(20260810);
        std::uniform_int_distribution<int> dim(1, 4), entry(-3, 3);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const int r = dim(rng), c = dim(rng);
            std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
            for (auto& row : rows)
                for (auto& v : row) v = entry(rng);
            auto m = oracles::matrix_from_rows(rows);
            auto got = smith_normal_form(m).diagonal;
            auto expect = oracles::minor_gcd_invariant_factors(rows);
            if (got != expect) {
                ok = false;
                detail = "snf mismatch on trial " + std::to_string(trial);
            }
            for (long long p : {2LL, 3LL, 5LL}) {
                int from_snf = 0;
                for (const auto& q : got)
                    if (q % p != 0) ++from_snf;
                if (rank_mod_p(m, p) != from_snf) {
                    ok = false;
                    detail = "rank_mod_p mismatch on trial " + std::to_string(trial);
                }
            }
        }
        report(9, "Smith form matches the minor-gcd oracle on 200 random matrices", ok, detail);
    }

    // ---- criterion 10: byte-identical JSON across runs ------------------------------
    {
        bool ok = true;
        std::string detail;
        const char* cli = std::getenv("WEYLHOM_CLI");
        if (!cli) {
            ok = false;
            detail = "WEYLHOM_CLI not set; run via ctest or export the CLI path";
        } else {
            namespace fs = std::filesystem;
            const auto dir = fs::temp_directory_path();
            const auto out1 = dir / "weylhom_det_1.json";
            const auto out2 = dir / "weylhom_det_2.json";
            const std::string base = std::string("\"") + cli +
                                     "\" compute --type B --rank 3 --primes 2,3 --format json";
            if (std::system((base + " > " + out1.string() + " 2>/dev/null").c_str()) != 0 ||
                std::system((base + " > " + out2.string() + " 2>/dev/null").c_str()) != 0) {
                ok = false;
                detail = "CLI invocation failed";
            } else {
                std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
                std::stringstream s1, s2;
                s1 << f1.rdbuf();
                s2 << f2.rdbuf();
                if (s1.str().empty() || s1.str() != s2.str()) {
                    ok = false;
                    detail = "outputs differ or are empty";
                }
            }
            fs::remove(out1);
            fs::remove(out2);
        }
        report(10, "repeated JSON runs are byte-identical", ok, detail);
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
