#pragma once

/*
 * Per-weight signed (co)chain complexes as graded integer matrices, plus the
 * complementation duality between the weight alpha chain complex and the
 * weight -alpha cochain complex.
 */

#include "weylhom/basis_graph.hpp"
#include "weylhom/exact_linalg.hpp"

#include <optional>
#include <vector>

namespace weylhom {

enum class Direction { chain, cochain };

struct GradedMatrixComplex {
    WeightKey weight;
    Direction direction = Direction::chain;
    int rank = 0;  // component rank r(alpha)
    int d_min = 0;
    int d_max = -1;
    // basis[t]: vertices of degree d_min+t, ascending bitmask
    std::vector<std::vector<VertexSubset>> basis;
    // chain:   mats[t] is D_{d_min+t}, mapping degree d_min+t to d_min+t-1
    // cochain: mats[t] maps degree d_min+t to d_min+t+1 (transposed chain matrix)
    std::vector<SparseIntMatrix> mats;

    int num_degrees() const { return d_max - d_min + 1; }
    int basis_size(int degree) const {
        if (degree < d_min || degree > d_max) return 0;
        return static_cast<int>(basis[degree - d_min].size());
    }
};

inline GradedMatrixComplex build_complex(const RootSystem& sys, const WeightComponent& comp,
                                         Direction dir) {
    GradedMatrixComplex cx;
    cx.weight = comp.weight;
    cx.direction = dir;
    cx.rank = comp.rank;
    if (comp.vertices.empty()) return cx;
    cx.d_min = comp.degree_range.first;
    cx.d_max = comp.degree_range.second;
    const int nd = cx.num_degrees();
    cx.basis.resize(nd);
    std::vector<int> pos_in_degree(comp.vertices.size());
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
        const int t = comp.vertices[i].degree() - cx.d_min;
        pos_in_degree[i] = static_cast<int>(cx.basis[t].size());
        cx.basis[t].push_back(comp.vertices[i]);  // keeps ascending bitmask order
    }

    std::vector<SparseIntMatrix> chain(nd);
    for (int t = 0; t < nd; ++t) {
        chain[t].rows = (t == 0) ? 0 : static_cast<int>(cx.basis[t - 1].size());
        chain[t].cols = static_cast<int>(cx.basis[t].size());
    }
    for (const auto& e : comp.edges) {
        const int t = comp.vertices[e.big].degree() - cx.d_min;
        chain[t].add_entry(pos_in_degree[e.small], pos_in_degree[e.big], e.sign);
    }
    for (auto& m : chain) m.sort_entries();

    if (dir == Direction::chain) {
        cx.mats = std::move(chain);
    } else {
        cx.mats.resize(nd);
        for (int t = 0; t < nd; ++t)
            cx.mats[t] = (t + 1 < nd) ? chain[t + 1].transposed() : SparseIntMatrix{};
        for (int t = 0; t < nd; ++t) {
            cx.mats[t].cols = static_cast<int>(cx.basis[t].size());
            cx.mats[t].rows = (t + 1 < nd) ? static_cast<int>(cx.basis[t + 1].size()) : 0;
        }
    }

    // d^2 = 0, asserted at build time
    for (int t = 0; t + 1 < nd; ++t) {
        const SparseIntMatrix prod = (dir == Direction::chain) ? multiply(cx.mats[t], cx.mats[t + 1])
                                                               : multiply(cx.mats[t + 1], cx.mats[t]);
        if (!prod.entries.empty()) {
            const auto& [r, c, v] = prod.entries.front();
            throw SquareNotZero("d^2 != 0 on weight " + comp.weight.str() + " between degrees " +
                                std::to_string(cx.d_min + t + 1) + " and " +
                                std::to_string(cx.d_min + t - (dir == Direction::chain ? 1 : -1)) +
                                " (entry " + std::to_string(r) + "," + std::to_string(c) + " = " +
                                v.str() + "); the sign function is not admissible here");
        }
    }
    return cx;
}

// D_{k+1} D_{k+1}^T + D_k^T D_k = r I on every degree k
inline bool laplacian_check(const GradedMatrixComplex& cx, int r, int* failed_degree = nullptr) {
    const int nd = cx.num_degrees();
    for (int t = 0; t < nd; ++t) {
        const int m = static_cast<int>(cx.basis[t].size());
        // "out of degree" and "into degree" matrices regardless of direction
        const SparseIntMatrix* out = &cx.mats[t];
        const SparseIntMatrix* in = nullptr;
        if (cx.direction == Direction::chain)
            in = (t + 1 < nd) ? &cx.mats[t + 1] : nullptr;
        else
            in = (t > 0) ? &cx.mats[t - 1] : nullptr;

        std::map<std::pair<int, int>, Bigint> acc;
        auto accumulate = [&](const SparseIntMatrix& mat, bool transpose_first) {
            // transpose_first: A^T A (columns indexed by degree); else A A^T (rows)
            if (transpose_first) {
                std::vector<std::vector<std::pair<int, Bigint>>> byrow(mat.rows);
                for (const auto& [rr, cc, v] : mat.entries) byrow[rr].emplace_back(cc, v);
                for (const auto& row : byrow)
                    for (const auto& [c1, v1] : row)
                        for (const auto& [c2, v2] : row) acc[{c1, c2}] += v1 * v2;
            } else {
                std::vector<std::vector<std::pair<int, Bigint>>> bycol(mat.cols);
                for (const auto& [rr, cc, v] : mat.entries) bycol[cc].emplace_back(rr, v);
                for (const auto& col : bycol)
                    for (const auto& [r1, v1] : col)
                        for (const auto& [r2, v2] : col) acc[{r1, r2}] += v1 * v2;
            }
        };
        accumulate(*out, true);
        if (in) accumulate(*in, false);

        for (int i = 0; i < m; ++i) {
            auto it = acc.find({i, i});
            const Bigint diag = (it == acc.end()) ? Bigint(0) : it->second;
            if (diag != r) {
                if (failed_degree) *failed_degree = cx.d_min + t;
                return false;
            }
        }
        for (const auto& [rc, v] : acc)
            if (rc.first != rc.second && v != 0) {
                if (failed_degree) *failed_degree = cx.d_min + t;
                return false;
            }
    }
    return true;
}

struct DualityMap {
    WeightKey source_weight;
    WeightKey target_weight;
    // per source vertex (component order): complement vertex and sign phi(sigma)
    std::vector<std::pair<VertexSubset, int>> assignment;
};

inline DualityMap build_duality(const RootSystem& sys, const WeightComponent& comp_a,
                                const WeightComponent& comp_na) {
    if (!((-comp_a.weight) == comp_na.weight))
        throw NotDual("weights " + comp_a.weight.str() + " and " + comp_na.weight.str() +
                      " are not negatives");
    DualityMap dm;
    dm.source_weight = comp_a.weight;
    dm.target_weight = comp_na.weight;
    const int N = sys.num_roots();
    for (auto v : comp_a.vertices) {
        VertexSubset c = v.complement(N);
        if (comp_na.local_index(c) < 0)
            throw NotDual("complement of a source vertex is missing from the target component");
        dm.assignment.emplace_back(c, vertex_sign(v));
    }
    // the map intertwines d with delta iff phi(s)phi(t)phi(s,t) = phi(s^c,t^c)
    for (const auto& e : comp_a.edges) {
        const VertexSubset s = comp_a.vertices[e.big], t = comp_a.vertices[e.small];
        const VertexSubset sc = s.complement(N), tc = t.complement(N);
        const int lhs = vertex_sign(s) * vertex_sign(t) * e.sign;
        if (lhs != edge_sign(sys, sc, tc))
            throw IntertwineFailure("duality sign identity fails on edge 0x" +
                                    std::to_string(s.bits) + " - 0x" + std::to_string(t.bits) +
                                    " of weight " + comp_a.weight.str());
    }
    return dm;
}

}  // namespace weylhom
