#pragma once

// Test-side oracles, kept independent of the library implementation paths
// they check.

#include "weylhom/exact_linalg.hpp"

#include <algorithm>
#include <vector>

namespace weylhom::oracles {

inline Bigint det_exact(const std::vector<std::vector<Bigint>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Bigint acc = 0;
    std::vector<std::vector<Bigint>> sub(n - 1, std::vector<Bigint>(n - 1));
    for (int c = 0; c < n; ++c) {
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                sub[i - 1][jj++] = a[i][j];
            }
        }
        Bigint term = a[0][c] * det_exact(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

// invariant factors from gcds of k x k minors: d_k = g_k / g_{k-1}
inline std::vector<Bigint> minor_gcd_invariant_factors(
    const std::vector<std::vector<long long>>& rows) {
    const int R = static_cast<int>(rows.size());
    const int C = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    std::vector<Bigint> g;
    for (int k = 1; k <= std::min(R, C); ++k) {
        Bigint gk = 0;
        std::vector<int> rsel(R, 0), csel(C, 0);
        std::fill(rsel.begin(), rsel.begin() + k, 1);
        std::sort(rsel.begin(), rsel.end());
        do {
            std::vector<int> rr;
            for (int i = 0; i < R; ++i)
                if (rsel[i]) rr.push_back(i);
            std::fill(csel.begin(), csel.end(), 0);
            std::fill(csel.begin(), csel.begin() + k, 1);
            std::sort(csel.begin(), csel.end());
            do {
                std::vector<int> cc;
                for (int j = 0; j < C; ++j)
                    if (csel[j]) cc.push_back(j);
                std::vector<std::vector<Bigint>> sub(k, std::vector<Bigint>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = rows[rr[i]][cc[j]];
                gk = gcd(gk, det_exact(sub));
            } while (std::next_permutation(csel.begin(), csel.end()));
        } while (std::next_permutation(rsel.begin(), rsel.end()));
        if (gk == 0) break;
        g.push_back(abs(gk));
    }
    std::vector<Bigint> d;
    Bigint prev = 1;
    for (const auto& gk : g) {
        d.push_back(gk / prev);
        prev = gk;
    }
    return d;
}

inline SparseIntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.add_entry(i, j, rows[i][j]);
    m.sort_entries();
    return m;
}

}  // namespace weylhom::oracles
