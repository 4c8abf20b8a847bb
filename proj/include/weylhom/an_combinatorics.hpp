#pragma once

/*
 * Type A specialization: combinatorial weights (integer tuples), the
 * translation between weights and combinatorial weights, the rank recursion
 * and the rank-zero permutation criterion.
 */

#include "weylhom/basis_graph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace weylhom {

using CombinatorialWeight = std::vector<int>;

inline std::string tuple_str(const CombinatorialWeight& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

// roots of A_n are e_{i,j} = eps_j - eps_i; recover (i, j) from coordinates
inline std::pair<int, int> root_endpoints(const RootSystem& sys, int root_index) {
    const ExactVector& v = sys.root(root_index).vector;
    int lo = -1, hi = -1;
    for (int d = 0; d < sys.dim; ++d) {
        if (v[d] == -2) lo = d;
        if (v[d] == 2) hi = d;
    }
    if (lo < 0 || hi < 0) throw Error("not a type A root realization");
    return {lo, hi};
}

inline CombinatorialWeight combinatorial_weight_of(const RootSystem& sys, VertexSubset s) {
    const int n = sys.rank;
    CombinatorialWeight t(n + 1, 0);
    for (int r = 0; r < sys.num_roots(); ++r) {
        auto [i, j] = root_endpoints(sys, r);
        if (s.contains(r))
            t[i] += 1;  // e_{i,.} in sigma counts toward i_i
        else
            t[j] += 1;  // e_{.,k} missing from sigma counts toward i_k
    }
    return t;
}

// alpha in doubled coordinates plus (n, ..., n), halved
inline CombinatorialWeight weight_translation(int n, const WeightKey& alpha) {
    CombinatorialWeight t(alpha.dim());
    for (std::size_t k = 0; k < alpha.dim(); ++k) {
        Bigint v = alpha[k] + n;
        if (v % 2 != 0)
            throw NotIntegral("weight " + alpha.str() + " does not translate to integers");
        t[k] = static_cast<int>(to_int64(v / 2));
    }
    return t;
}

inline bool is_permutation_of_iota(const CombinatorialWeight& t) {
    CombinatorialWeight s = t;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i)) return false;
    return true;
}

struct RankRecursionFailure {
    CombinatorialWeight from, to;
    long long expected, actual;
};

// property: moving (j at s, i at t) to (j+1 at s, i-1 at t) raises the rank
// by i - j - 1, whenever both tuples are realized weights
inline bool rank_recursion_check(const std::map<CombinatorialWeight, long long>& ranks,
                                 std::vector<RankRecursionFailure>* failures = nullptr) {
    bool ok = true;
    for (const auto& [v, rv] : ranks) {
        const std::size_t n1 = v.size();
        for (std::size_t s = 0; s < n1; ++s)
            for (std::size_t t = 0; t < n1; ++t) {
                if (s == t) continue;
                const int j = v[s], i = v[t];
                CombinatorialWeight u = v;
                u[s] = j + 1;
                u[t] = i - 1;
                auto it = ranks.find(u);
                if (it == ranks.end()) continue;
                const long long expected = rv + i - j - 1;
                if (it->second != expected) {
                    ok = false;
                    if (failures)
                        failures->push_back({v, u, expected, it->second});
                }
            }
    }
    return ok;
}

inline CombinatorialWeight reversal_tuple(int n, const CombinatorialWeight& t) {
    CombinatorialWeight r(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) r[k] = n - t[t.size() - 1 - k];
    return r;
}

inline CombinatorialWeight rotation_tuple(const CombinatorialWeight& t) {
    CombinatorialWeight r(t.size());
    r[0] = t.back();
    for (std::size_t k = 1; k < t.size(); ++k) r[k] = t[k - 1];
    return r;
}

// degree shift of the rotation correspondence: a vertex of degree d maps to
// one of degree d + 2 i_n - n
inline int rotation_degree_shift(int n, const CombinatorialWeight& t) { return 2 * t.back() - n; }

inline CombinatorialWeight duality_tuple(int n, const CombinatorialWeight& t) {
    CombinatorialWeight r(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) r[k] = n - t[k];
    return r;
}

}  // namespace weylhom
