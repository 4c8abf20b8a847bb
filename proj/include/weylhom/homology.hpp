#pragma once

/*
 * Per-weight integral and mod-p (co)homology from graded matrix complexes,
 * global aggregation against the Weyl length histogram, and the mod-p
 * vanishing audit.
 */

#include "weylhom/weight_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylhom {

inline std::vector<Bigint> prime_power_factors(const Bigint& n) {
    std::vector<Bigint> out;
    Bigint m = n;
    for (Bigint p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        Bigint q = 1;
        while (m % p == 0) {
            q *= p;
            m /= p;
        }
        out.push_back(q);
    }
    if (m > 1) out.push_back(m);
    return out;
}

struct DegreeHomology {
    long long free_rank = 0;
    std::vector<Bigint> torsion;           // prime powers, sorted ascending
    std::map<long long, long long> mod_p;  // prime -> dim over F_p
};

struct HomologyReport {
    WeightKey weight;
    long long rank_of_weight = 0;
    Direction direction = Direction::chain;
    int component_size = 0;
    int d_min = 0;
    int d_max = -1;
    std::vector<DegreeHomology> by_degree;  // d_min..d_max

    const DegreeHomology* at(int degree) const {
        if (degree < d_min || degree > d_max) return nullptr;
        return &by_degree[degree - d_min];
    }
    long long free_rank_at(int degree) const {
        auto* d = at(degree);
        return d ? d->free_rank : 0;
    }
    bool has_torsion() const {
        for (const auto& d : by_degree)
            if (!d.torsion.empty()) return true;
        return false;
    }
};

inline HomologyReport homology_of(const GradedMatrixComplex& cx,
                                  const std::vector<long long>& primes) {
    HomologyReport rep;
    rep.weight = cx.weight;
    rep.rank_of_weight = cx.rank;
    rep.direction = cx.direction;
    rep.d_min = cx.d_min;
    rep.d_max = cx.d_max;
    const int nd = cx.num_degrees();
    for (int t = 0; t < nd; ++t) rep.component_size += static_cast<int>(cx.basis[t].size());
    if (nd <= 0) return rep;

    std::vector<SmithForm> snf(nd);
    std::vector<std::map<long long, int>> prank(nd);
    for (int t = 0; t < nd; ++t) {
        snf[t] = smith_normal_form(cx.mats[t]);
        for (long long p : primes) prank[t][p] = rank_mod_p(cx.mats[t], p);
    }

    rep.by_degree.resize(nd);
    for (int t = 0; t < nd; ++t) {
        const int m = static_cast<int>(cx.basis[t].size());
        // matrix leaving degree t and matrix arriving into degree t
        const int out_t = t;
        const int in_t = (cx.direction == Direction::chain) ? t + 1 : t - 1;
        const SmithForm* out_s = &snf[out_t];
        const SmithForm* in_s = (in_t >= 0 && in_t < nd) ? &snf[in_t] : nullptr;

        DegreeHomology& h = rep.by_degree[t];
        h.free_rank = m - out_s->rank - (in_s ? in_s->rank : 0);
        if (in_s)
            for (const auto& d : in_s->diagonal)
                if (d > 1)
                    for (auto& q : prime_power_factors(d)) h.torsion.push_back(q);
        std::sort(h.torsion.begin(), h.torsion.end());
        for (long long p : primes) {
            const int out_r = prank[out_t].at(p);
            const int in_r = (in_t >= 0 && in_t < nd) ? prank[in_t].at(p) : 0;
            h.mod_p[p] = m - out_r - in_r;
        }
    }
    return rep;
}

struct GlobalSummary {
    std::vector<long long> betti;          // degree 0..|R+|, total free rank
    std::vector<long long> torsion_count;  // degree 0..|R+|, number of torsion prime powers
    std::vector<long long> weyl_histogram; // degree 0..|R+|, #{w : l(w) = k}
    std::vector<long long> torsion_primes; // sorted, distinct
    std::vector<WeightKey> singleton_weights;
    std::vector<std::string> violations;
};

inline GlobalSummary global_summary(const RootSystem& sys, const std::vector<WeylElement>& group,
                                    const std::vector<HomologyReport>& reports,
                                    bool throw_on_violation = true) {
    const int N = sys.num_roots();
    GlobalSummary s;
    s.betti.assign(N + 1, 0);
    s.torsion_count.assign(N + 1, 0);
    s.weyl_histogram.assign(N + 1, 0);
    for (const auto& w : group) s.weyl_histogram[w.length] += 1;

    std::map<Bigint, bool> primes_seen;
    for (const auto& rep : reports) {
        if (rep.component_size == 1) s.singleton_weights.push_back(rep.weight);
        for (int k = rep.d_min; k <= rep.d_max; ++k) {
            const DegreeHomology& h = *rep.at(k);
            s.betti[k] += h.free_rank;
            s.torsion_count[k] += static_cast<long long>(h.torsion.size());
            for (const auto& q : h.torsion) {
                Bigint p = 2;
                while (q % p != 0) ++p;
                primes_seen[p] = true;
                if (Bigint(rep.rank_of_weight) % p != 0)
                    s.violations.push_back("torsion prime " + p.str() + " at weight " +
                                           rep.weight.str() + " with p not dividing r = " +
                                           std::to_string(rep.rank_of_weight));
            }
            // characteristic zero part of the vanishing theorem
            if (rep.rank_of_weight != 0 && h.free_rank != 0)
                s.violations.push_back("nonzero free rank at weight " + rep.weight.str() +
                                       " although r = " + std::to_string(rep.rank_of_weight) +
                                       " is nonzero");
        }
    }
    for (auto& [p, _] : primes_seen) s.torsion_primes.push_back(to_int64(p));

    for (int k = 0; k <= N; ++k)
        if (s.betti[k] != s.weyl_histogram[k])
            s.violations.push_back("free rank " + std::to_string(s.betti[k]) + " in degree " +
                                   std::to_string(k) + " does not match the Weyl histogram value " +
                                   std::to_string(s.weyl_histogram[k]));
    if (static_cast<long long>(s.singleton_weights.size()) !=
        static_cast<long long>(group.size()))
        s.violations.push_back("singleton component count " +
                               std::to_string(s.singleton_weights.size()) +
                               " does not equal |W| = " + std::to_string(group.size()));

    if (throw_on_violation && !s.violations.empty()) {
        std::string msg = "theorem verification failed:";
        for (const auto& v : s.violations) msg += "\n  " + v;
        throw TheoremViolation(msg);
    }
    return s;
}

struct AuditEntry {
    WeightKey weight;
    long long rank_of_weight = 0;
    std::vector<int> degrees;  // degrees with nonzero F_p homology
};

inline std::vector<AuditEntry> vanishing_audit(const std::vector<HomologyReport>& reports,
                                               long long p) {
    std::vector<AuditEntry> out;
    for (const auto& rep : reports) {
        AuditEntry e;
        for (int k = rep.d_min; k <= rep.d_max; ++k) {
            const auto& h = *rep.at(k);
            auto it = h.mod_p.find(p);
            if (it != h.mod_p.end() && it->second != 0) e.degrees.push_back(k);
        }
        if (!e.degrees.empty()) {
            e.weight = rep.weight;
            e.rank_of_weight = rep.rank_of_weight;
            out.push_back(std::move(e));
        }
    }
    return out;
}

inline std::vector<long long> default_primes(int max_rank) {
    std::vector<long long> out;
    for (long long p = 2; p <= max_rank; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace weylhom
