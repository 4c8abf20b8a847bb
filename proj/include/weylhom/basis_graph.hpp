#pragma once

/*
 * The basis graph on all subsets of R+: weight map and decomposition into
 * weight components, the twisted Weyl action, edge and vertex signs, index
 * of a weight, diamond completion and the per-component structural checks.
 */

#include "weylhom/root_system.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace weylhom {

struct VertexSubset {
    std::uint32_t bits = 0;

    int degree() const { return std::popcount(bits); }
    bool contains(int i) const { return (bits >> i) & 1u; }
    VertexSubset with(int i) const { return {bits | (1u << i)}; }
    VertexSubset without(int i) const { return {bits & ~(1u << i)}; }
    VertexSubset complement(int num_roots) const {
        const std::uint32_t full = (num_roots == 32) ? ~0u : ((1u << num_roots) - 1u);
        return {full & ~bits};
    }
    friend bool operator==(VertexSubset a, VertexSubset b) { return a.bits == b.bits; }
    friend bool operator!=(VertexSubset a, VertexSubset b) { return a.bits != b.bits; }
    friend bool operator<(VertexSubset a, VertexSubset b) { return a.bits < b.bits; }
};

using WeightKey = ExactVector;

inline WeightKey weight_of(const RootSystem& sys, VertexSubset s) {
    ExactVector w = sys.rho;
    for (int i = 0; i < sys.num_roots(); ++i)
        if (s.contains(i)) w -= sys.root(i).vector;
    return w;
}

inline bool are_adjacent(const RootSystem& sys, VertexSubset s, VertexSubset t) {
    std::uint32_t d1 = s.bits & ~t.bits, d2 = t.bits & ~s.bits;
    if (std::popcount(d1) > std::popcount(d2)) std::swap(d1, d2);
    if (std::popcount(d1) != 1 || std::popcount(d2) != 2) return false;
    const int e = std::countr_zero(d1);
    const int e1 = std::countr_zero(d2);
    const int e2 = 31 - std::countl_zero(d2);
    return sys.sum_index(e1, e2) == e;
}

inline VertexSubset circ_action(const RootSystem& sys, const WeylElement& w, VertexSubset s) {
    // w o s = w * (s u -s^c) n R+
    VertexSubset out;
    for (int i = 0; i < sys.num_roots(); ++i) {
        auto [j, sign] = w.apply(i);
        const bool member = s.contains(i) ? (sign > 0) : (sign < 0);
        if (member) out.bits |= (1u << j);
    }
    return out;
}

// the unique integer r with r_e * alpha - alpha = r e
inline long long index_of(const RootSystem& sys, const Root& e, const WeightKey& alpha) {
    const Bigint num = 2 * dot(alpha, e.vector);
    const Bigint den = dot(e.vector, e.vector);
    if (num % den != 0)
        throw NotProportional("r_e*a - a is not an integer multiple of e for a = " + alpha.str() +
                              ", e = " + e.vector.str());
    return to_int64(-(num / den));
}

inline int edge_sign(const RootSystem& sys, VertexSubset s, VertexSubset t) {
    std::uint32_t big = s.bits, small = t.bits;
    if (std::popcount(big) == std::popcount(small) + 1) {
        // ok
    } else if (std::popcount(small) == std::popcount(big) + 1) {
        std::swap(big, small);
    } else {
        throw NotAnEdge("edge_sign: degrees do not differ by one");
    }
    const std::uint32_t d1 = big & ~small, d2 = small & ~big;
    if (std::popcount(d1) != 2 || std::popcount(d2) != 1)
        throw NotAnEdge("edge_sign: symmetric difference does not match the exchange rule");
    const int u = std::countr_zero(d1);
    const int v = 31 - std::countl_zero(d1);
    const int w = std::countr_zero(d2);
    if (sys.sum_index(u, v) != w) throw NotAnEdge("edge_sign: e1+e2 is not the exchanged root");
    auto below = [](std::uint32_t bits, int k) {
        const std::uint32_t m = (k == 31) ? ~0u : ((1u << (k + 1)) - 1u);
        return std::popcount(bits & m);
    };
    const int a = below(big, u), b = below(big, v), c = below(small, w);
    return ((a + b + c) % 2 == 0) ? 1 : -1;
}

inline int vertex_sign(VertexSubset s) {
    // (-1)^(sum of 1-based positions)
    int parity = 0;
    std::uint32_t bits = s.bits;
    while (bits) {
        parity += std::countr_zero(bits) + 1;
        bits &= bits - 1;
    }
    return (parity % 2 == 0) ? 1 : -1;
}

// --- weight components ------------------------------------------------------

struct WeightComponent {
    WeightKey weight;
    std::vector<VertexSubset> vertices;  // sorted by bitmask
    struct Edge {
        int big;   // local index of the endpoint of larger degree
        int small; // local index of the endpoint of smaller degree
        int sign;
    };
    std::vector<Edge> edges;
    int rank = 0;  // common neighbor count (uniformity is a verified theorem)
    std::pair<int, int> degree_range{0, 0};

    int local_index(VertexSubset v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) return -1;
        return static_cast<int>(it - vertices.begin());
    }
};

inline void build_edges(const RootSystem& sys, WeightComponent& comp) {
    comp.edges.clear();
    int mind = 32, maxd = 0;
    for (std::size_t vi = 0; vi < comp.vertices.size(); ++vi) {
        const VertexSubset s = comp.vertices[vi];
        mind = std::min(mind, s.degree());
        maxd = std::max(maxd, s.degree());
        std::uint32_t bits = s.bits;
        while (bits) {
            const int e = std::countr_zero(bits);
            bits &= bits - 1;
            for (auto [i, j] : sys.decompositions(e)) {
                if (s.contains(i) || s.contains(j)) continue;
                VertexSubset big = s.without(e).with(i).with(j);
                const int bi = comp.local_index(big);
                if (bi < 0)
                    throw Error("edge endpoint missing from its weight component");
                comp.edges.push_back({bi, static_cast<int>(vi), edge_sign(sys, big, s)});
            }
        }
    }
    comp.degree_range = {comp.vertices.empty() ? 0 : mind, comp.vertices.empty() ? 0 : maxd};
    std::vector<int> degree(comp.vertices.size(), 0);
    for (const auto& e : comp.edges) {
        ++degree[e.big];
        ++degree[e.small];
    }
    comp.rank = degree.empty() ? 0 : degree[0];
}

struct DecomposeOptions {
    bool with_edges = true;
    bool force_streaming = false;  // exercise the two-pass path on small systems
};

namespace detail {

struct PackedWeight {
    std::array<long long, 8> c{};
    std::uint8_t n = 0;
    friend bool operator==(const PackedWeight& a, const PackedWeight& b) {
        return a.n == b.n && a.c == b.c;
    }
};

struct PackedWeightHash {
    std::size_t operator()(const PackedWeight& k) const {
        std::uint64_t h = 14695981039346656037ull;
        for (int i = 0; i < k.n; ++i) {
            h ^= static_cast<std::uint64_t>(k.c[i]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Gray-code walk over all masks; fn(mask, key) sees every subset once.
template <typename Fn>
void for_each_subset_weight(const RootSystem& sys, Fn&& fn) {
    const int N = sys.num_roots();
    const int dim = sys.dim;
    PackedWeight cur;
    cur.n = static_cast<std::uint8_t>(dim);
    for (int d = 0; d < dim; ++d) cur.c[d] = to_int64(sys.rho[d]);
    std::uint32_t mask = 0;
    fn(mask, cur);
    const std::uint64_t total = 1ull << N;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int b = std::countr_zero(k);
        mask ^= (1u << b);
        const auto& rv = sys.packed_root(b);
        if (mask & (1u << b))
            for (int d = 0; d < dim; ++d) cur.c[d] -= rv[d];
        else
            for (int d = 0; d < dim; ++d) cur.c[d] += rv[d];
        fn(mask, cur);
    }
}

}  // namespace detail

inline std::vector<WeightComponent> decompose(const RootSystem& sys,
                                              const DecomposeOptions& opts = {}) {
    const int N = sys.num_roots();
    if (N > 24) throw SizeExceeded("subset enumeration over 2^" + std::to_string(N));

    using detail::PackedWeight;
    std::unordered_map<PackedWeight, int, detail::PackedWeightHash> comp_of;
    std::vector<std::vector<std::uint32_t>> members;
    const bool streaming = opts.force_streaming || N >= 22;

    if (streaming) {
        // pass 1: component sizes; pass 2: fill preallocated buckets
        std::unordered_map<PackedWeight, std::uint32_t, detail::PackedWeightHash> sizes;
        detail::for_each_subset_weight(sys, [&](std::uint32_t, const PackedWeight& k) {
            ++sizes[k];
        });
        members.reserve(sizes.size());
        comp_of.reserve(sizes.size());
        for (const auto& [k, n] : sizes) {
            comp_of.emplace(k, static_cast<int>(members.size()));
            members.emplace_back();
            members.back().reserve(n);
        }
        detail::for_each_subset_weight(sys, [&](std::uint32_t mask, const PackedWeight& k) {
            members[comp_of.find(k)->second].push_back(mask);
        });
    } else {
        detail::for_each_subset_weight(sys, [&](std::uint32_t mask, const PackedWeight& k) {
            auto [it, fresh] = comp_of.try_emplace(k, static_cast<int>(members.size()));
            if (fresh) members.emplace_back();
            members[it->second].push_back(mask);
        });
    }

    std::vector<WeightComponent> comps(members.size());
    for (const auto& [key, ci] : comp_of) {
        WeightComponent& c = comps[ci];
        std::vector<Bigint> coords(key.n);
        for (int d = 0; d < key.n; ++d) coords[d] = key.c[d];
        c.weight = ExactVector(std::move(coords));
        auto& m = members[ci];
        std::sort(m.begin(), m.end());
        c.vertices.reserve(m.size());
        for (auto bits : m) c.vertices.push_back({bits});
    }
    std::sort(comps.begin(), comps.end(),
              [](const WeightComponent& a, const WeightComponent& b) { return a.weight < b.weight; });

    if (opts.with_edges)
        for (auto& c : comps) build_edges(sys, c);
    return comps;
}

inline std::pair<std::vector<VertexSubset>, std::vector<VertexSubset>> split_by_root(
    const WeightComponent& comp, const Root& e) {
    std::pair<std::vector<VertexSubset>, std::vector<VertexSubset>> out;
    for (auto v : comp.vertices)
        (v.contains(e.index) ? out.first : out.second).push_back(v);
    return out;
}

// all neighbors of a vertex in the basis graph, found locally
inline std::vector<VertexSubset> neighbors_of(const RootSystem& sys, VertexSubset s) {
    std::vector<VertexSubset> out;
    std::uint32_t bits = s.bits;
    while (bits) {
        const int e = std::countr_zero(bits);
        bits &= bits - 1;
        for (auto [i, j] : sys.decompositions(e))
            if (!s.contains(i) && !s.contains(j)) out.push_back(s.without(e).with(i).with(j));
    }
    for (int i = 0; i < sys.num_roots(); ++i) {
        if (!s.contains(i)) continue;
        for (int j = i + 1; j < sys.num_roots(); ++j) {
            if (!s.contains(j)) continue;
            const int k = sys.sum_index(i, j);
            if (k >= 0 && !s.contains(k)) out.push_back(s.without(i).without(j).with(k));
        }
    }
    return out;
}

inline VertexSubset diamond_completion(const RootSystem& sys, VertexSubset a, VertexSubset b,
                                       VertexSubset c) {
    if (a == c) throw NotAnEdge("diamond_completion: a and c coincide");
    if (!are_adjacent(sys, a, b) || !are_adjacent(sys, b, c))
        throw NotAnEdge("diamond_completion: {a,b} and {b,c} must be edges");
    if (are_adjacent(sys, a, c))
        throw NotAnEdge("diamond_completion: {a,c} must not be an edge");
    std::vector<VertexSubset> cands;
    for (auto d : neighbors_of(sys, a)) {
        if (d == b) continue;
        if (are_adjacent(sys, d, c)) cands.push_back(d);
    }
    std::ostringstream path;
    path << std::hex << "<a=0x" << a.bits << ", b=0x" << b.bits << ", c=0x" << c.bits << ">";
    if (cands.empty()) throw NoDiamond("no diamond completion for 2-path " + path.str());
    if (cands.size() > 1) {
        path << " candidates:";
        for (auto d : cands) path << std::hex << " 0x" << d.bits;
        throw MultipleDiamonds("non-unique diamond completion for 2-path " + path.str());
    }
    return cands[0];
}

// --- per-component verification ---------------------------------------------

struct ComponentCheck {
    bool no_triangles = true;
    bool diamond_unique = true;
    bool connected = true;
    bool uniform_rank = true;
    bool admissible = true;
    bool neighbor_property = true;
    int rank = 0;
    std::string counterexample;

    bool ok() const {
        return no_triangles && diamond_unique && connected && uniform_rank && admissible &&
               neighbor_property;
    }
};

inline ComponentCheck verify_component(const RootSystem& sys, const WeightComponent& comp) {
    ComponentCheck res;
    const int nv = static_cast<int>(comp.vertices.size());
    std::vector<std::vector<int>> adj(nv);
    std::vector<std::vector<int>> sign(nv);
    for (const auto& e : comp.edges) {
        adj[e.big].push_back(e.small);
        sign[e.big].push_back(e.sign);
        adj[e.small].push_back(e.big);
        sign[e.small].push_back(e.sign);
    }
    auto note = [&](const std::string& s) {
        if (res.counterexample.empty())
            res.counterexample = "weight " + comp.weight.str() + ": " + s;
    };
    auto hexv = [&](int i) {
        std::ostringstream o;
        o << "0x" << std::hex << comp.vertices[i].bits;
        return o.str();
    };
    auto sign_between = [&](int x, int y) {
        for (std::size_t k = 0; k < adj[x].size(); ++k)
            if (adj[x][k] == y) return sign[x][k];
        return 0;
    };

    // (1) no triangles; implied by the degree grading but checked directly
    for (int v = 0; v < nv; ++v)
        for (int u : adj[v])
            for (int w : adj[v])
                if (u < w && sign_between(u, w) != 0) {
                    res.no_triangles = false;
                    note("triangle " + hexv(u) + "," + hexv(v) + "," + hexv(w));
                }

    // (4) uniform neighbor count
    res.rank = nv ? static_cast<int>(adj[0].size()) : 0;
    for (int v = 0; v < nv; ++v)
        if (static_cast<int>(adj[v].size()) != res.rank) {
            res.uniform_rank = false;
            note("vertex " + hexv(v) + " has " + std::to_string(adj[v].size()) +
                 " neighbors, vertex " + hexv(0) + " has " + std::to_string(res.rank));
            break;
        }

    // (2) unique diamond on every 2-path + (5) admissibility on it
    for (int b = 0; b < nv && res.no_triangles; ++b) {
        for (std::size_t i = 0; i < adj[b].size(); ++i)
            for (std::size_t j = i + 1; j < adj[b].size(); ++j) {
                const int a = adj[b][i], c = adj[b][j];
                int dcount = 0, dlast = -1;
                for (int d : adj[a]) {
                    if (d == b) continue;
                    if (sign_between(d, c) != 0) {
                        ++dcount;
                        dlast = d;
                    }
                }
                if (dcount != 1) {
                    res.diamond_unique = false;
                    note("2-path " + hexv(a) + "-" + hexv(b) + "-" + hexv(c) + " has " +
                         std::to_string(dcount) + " completions");
                    continue;
                }
                const int d = dlast;
                if (sign_between(a, b) * sign_between(b, c) +
                        sign_between(a, d) * sign_between(d, c) !=
                    0) {
                    res.admissible = false;
                    note("sign identity fails on diamond <" + hexv(a) + ";" + hexv(b) + ";" +
                         hexv(c) + ";" + hexv(d) + ">");
                }
            }
    }

    // (3) connectivity by BFS over the discovered edges
    if (nv > 0) {
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != nv) {
            res.connected = false;
            note("BFS reaches " + std::to_string(reached) + " of " + std::to_string(nv) +
                 " vertices");
        }
    }

    // (6) index vs neighbors, for every root
    for (int e = 0; e < sys.num_roots() && res.neighbor_property; ++e) {
        const long long r = index_of(sys, sys.root(e), comp.weight);
        std::vector<int> side1, side0;
        for (int v = 0; v < nv; ++v)
            (comp.vertices[v].contains(e) ? side1 : side0).push_back(v);
        auto has_neighbor_across = [&](int v, bool want_member) {
            for (int u : adj[v])
                if (comp.vertices[u].contains(e) == want_member) return true;
            return false;
        };
        if (r >= 0) {
            if (side1.empty()) {
                res.neighbor_property = false;
                note("r(e,a) = " + std::to_string(r) + " >= 0 but no vertex contains root " +
                     std::to_string(e));
            }
            for (int v : side0)
                if (!has_neighbor_across(v, true)) {
                    res.neighbor_property = false;
                    note("vertex " + hexv(v) + " has no neighbor containing root " +
                         std::to_string(e) + " although r = " + std::to_string(r));
                    break;
                }
        }
        if (r <= 0) {
            if (side0.empty()) {
                res.neighbor_property = false;
                note("r(e,a) = " + std::to_string(r) + " <= 0 but every vertex contains root " +
                     std::to_string(e));
            }
            for (int v : side1)
                if (!has_neighbor_across(v, false)) {
                    res.neighbor_property = false;
                    note("vertex " + hexv(v) + " has no neighbor avoiding root " +
                         std::to_string(e) + " although r = " + std::to_string(r));
                    break;
                }
        }
    }

    return res;
}

inline const WeightComponent* find_component(const std::vector<WeightComponent>& comps,
                                             const WeightKey& w) {
    auto it = std::lower_bound(comps.begin(), comps.end(), w,
                               [](const WeightComponent& c, const WeightKey& k) {
                                   return c.weight < k;
                               });
    if (it == comps.end() || !(it->weight == w)) return nullptr;
    return &*it;
}

}  // namespace weylhom
