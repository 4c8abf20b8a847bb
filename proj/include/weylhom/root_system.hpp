#pragma once

/*
 * Exact realizations of the positive root systems A1..A6, B2..B4, C2..C4,
 * D4, G2 and F4, with simple roots, reflections and Weyl group enumeration.
 *
 * Coordinates are doubled integers throughout. The total order on R+ is
 * ascending height with tie-breaks inside each height level chosen
 * deterministically so that the edge sign function is admissible on every
 * diamond of the subset graph; plain lexicographic tie-breaking fails this
 * for B3 and G2, and no height-compatible order exists for B4, where a
 * seeded permutation search takes over. See canonical_order below.
 */

#include "weylhom/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace weylhom {

enum class DynkinType { A, B, C, D, G2, F4 };

inline std::string type_name(DynkinType t) {
    switch (t) {
        case DynkinType::A: return "A";
        case DynkinType::B: return "B";
        case DynkinType::C: return "C";
        case DynkinType::D: return "D";
        case DynkinType::G2: return "G2";
        case DynkinType::F4: return "F4";
    }
    return "?";
}

inline std::optional<DynkinType> parse_type(const std::string& s) {
    if (s == "A" || s == "a") return DynkinType::A;
    if (s == "B" || s == "b") return DynkinType::B;
    if (s == "C" || s == "c") return DynkinType::C;
    if (s == "D" || s == "d") return DynkinType::D;
    if (s == "G2" || s == "g2" || s == "G") return DynkinType::G2;
    if (s == "F4" || s == "f4" || s == "F") return DynkinType::F4;
    return std::nullopt;
}

struct Root {
    ExactVector vector;  // doubled coordinates
    int index = -1;      // position in the fixed total order
    bool is_simple = false;
};

using Coords = std::vector<long long>;  // doubled, used while ordering

namespace detail {

struct Realization {
    std::vector<Coords> roots;
    std::vector<Coords> simples;
};

inline Realization realize(DynkinType t, int n) {
    Realization r;
    auto unit = [](int dim, int i, long long v) {
        Coords c(dim, 0);
        c[i] = v;
        return c;
    };
    switch (t) {
        case DynkinType::A: {
            const int dim = n + 1;
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Coords c(dim, 0);
                    c[i] = -2;
                    c[j] = 2;
                    r.roots.push_back(c);
                    if (j == i + 1) r.simples.push_back(c);
                }
            break;
        }
        case DynkinType::B:
        case DynkinType::C:
        case DynkinType::D: {
            const int dim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (long long s : {2LL, -2LL}) {
                        Coords c(dim, 0);
                        c[i] = 2;
                        c[j] = s;
                        r.roots.push_back(c);
                    }
            if (t == DynkinType::B)
                for (int i = 0; i < n; ++i) r.roots.push_back(unit(dim, i, 2));
            if (t == DynkinType::C)
                for (int i = 0; i < n; ++i) r.roots.push_back(unit(dim, i, 4));
            for (int i = 0; i + 1 < n; ++i) {
                Coords c(dim, 0);
                c[i] = 2;
                c[i + 1] = -2;
                r.simples.push_back(c);
            }
            if (t == DynkinType::B) r.simples.push_back(unit(dim, n - 1, 2));
            if (t == DynkinType::C) r.simples.push_back(unit(dim, n - 1, 4));
            if (t == DynkinType::D) {
                Coords c(dim, 0);
                c[n - 2] = 2;
                c[n - 1] = 2;
                r.simples.push_back(c);
            }
            break;
        }
        case DynkinType::G2: {
            r.roots = {{2, -2, 0}, {-4, 2, 2}, {-2, 0, 2}, {0, -2, 2}, {2, -4, 2}, {-2, -2, 4}};
            r.simples = {{2, -2, 0}, {-4, 2, 2}};
            break;
        }
        case DynkinType::F4: {
            const int dim = 4;
            for (int i = 0; i < 4; ++i) r.roots.push_back(unit(dim, i, 2));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (long long s : {2LL, -2LL}) {
                        Coords c(dim, 0);
                        c[i] = 2;
                        c[j] = s;
                        r.roots.push_back(c);
                    }
            for (long long s2 : {1LL, -1LL})
                for (long long s3 : {1LL, -1LL})
                    for (long long s4 : {1LL, -1LL}) r.roots.push_back({1, s2, s3, s4});
            r.simples = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            break;
        }
    }
    return r;
}

inline long long dot_ll(const Coords& a, const Coords& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// height = <r, dual Weyl vector> = sum over e in R+ of <r,e>/<e,e>
inline std::vector<int> heights_of(const std::vector<Coords>& roots) {
    using Rat = boost::multiprecision::cpp_rational;
    std::vector<int> hs;
    hs.reserve(roots.size());
    for (const auto& r : roots) {
        Rat h = 0;
        for (const auto& e : roots) h += Rat(dot_ll(r, e), dot_ll(e, e));
        if (denominator(h) != 1 || h < 1)
            throw Error("height computation failed for a root");
        hs.push_back(static_cast<int>(numerator(h)));
    }
    return hs;
}

// A triple (x; y, z) with x+y, x+z and x+y+z in R+ spans a four-vertex
// diamond {x,y,z} / {x+y,z} / {y,x+z} / {x+y+z}. Around it the sign rule
// gives parity [x<y]+[x<z]+[x+z<y]+[x+y<z], which must be even. Triples
// whose third pairwise sum y+z is also a root break the diamond property
// outright and no order can help; they are collected separately.
struct OrderConstraints {
    std::vector<std::array<int, 6>> triples;  // x, y, z, x+y, x+z, x+y+z (root ids)
    int multi_diamond_triples = 0;
};

inline OrderConstraints overlap_constraints(const std::vector<Coords>& roots) {
    OrderConstraints oc;
    const int n = static_cast<int>(roots.size());
    std::map<Coords, int> idx;
    for (int i = 0; i < n; ++i) idx[roots[i]] = i;
    auto sum_idx = [&](int i, int j) {
        Coords s(roots[i].size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = roots[i][k] + roots[j][k];
        auto it = idx.find(s);
        return it == idx.end() ? -1 : it->second;
    };
    for (int x = 0; x < n; ++x) {
        std::vector<std::pair<int, int>> partners;  // (y, x+y)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            int u = sum_idx(x, y);
            if (u >= 0) partners.emplace_back(y, u);
        }
        for (std::size_t i = 0; i < partners.size(); ++i)
            for (std::size_t j = i + 1; j < partners.size(); ++j) {
                auto [y, u] = partners[i];
                auto [z, v] = partners[j];
                int s = sum_idx(u, z);
                if (s < 0) continue;
                if (sum_idx(y, z) >= 0) {
                    ++oc.multi_diamond_triples;
                    continue;
                }
                oc.triples.push_back({x, y, z, u, v, s});
            }
    }
    return oc;
}

inline bool order_satisfies(const OrderConstraints& oc, const std::vector<int>& pos) {
    for (const auto& t : oc.triples) {
        int parity = (pos[t[0]] < pos[t[1]]) + (pos[t[0]] < pos[t[2]]) + (pos[t[4]] < pos[t[1]]) +
                     (pos[t[3]] < pos[t[2]]);
        if (parity & 1) return false;
    }
    return true;
}

// Backtracking over per-level permutations of a height order; levels are
// processed bottom-up and a constraint is checked as soon as every
// comparison it needs is decided (cross-level comparisons are fixed by
// height, same-level ones by the permutations chosen so far).
inline bool solve_height_tiebreaks(const std::vector<Coords>& roots, const std::vector<int>& hs,
                                   const OrderConstraints& oc, std::vector<int>& out_order) {
    const int n = static_cast<int>(roots.size());
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::sort(base.begin(), base.end(), [&](int a, int b) {
        return std::pair(hs[a], roots[a]) < std::pair(hs[b], roots[b]);
    });
    std::map<int, std::vector<int>> levels;
    for (int i : base) levels[hs[i]].push_back(i);
    std::vector<int> tie_heights;
    for (auto& [h, v] : levels)
        if (v.size() > 1) tie_heights.push_back(h);

    std::vector<int> pos(n, -1);
    std::vector<char> decided_level(64, 0);
    for (auto& [h, v] : levels)
        if (v.size() == 1) {
            decided_level[h] = 1;
            pos[v[0]] = 0;
        }

    auto cmp_known = [&](int a, int b, bool& value) {
        if (hs[a] != hs[b]) {
            value = hs[a] < hs[b];
            return true;
        }
        if (!decided_level[hs[a]]) return false;
        value = pos[a] < pos[b];
        return true;
    };
    auto constraints_ok = [&]() {
        for (const auto& t : oc.triples) {
            bool c0, c1, c2, c3;
            if (!cmp_known(t[0], t[1], c0) || !cmp_known(t[0], t[2], c1) ||
                !cmp_known(t[4], t[1], c2) || !cmp_known(t[3], t[2], c3))
                continue;
            if ((c0 + c1 + c2 + c3) & 1) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> bt = [&](std::size_t li) -> bool {
        if (li == tie_heights.size()) return true;
        const int h = tie_heights[li];
        std::vector<int> perm = levels[h];  // lex-sorted members
        do {
            for (std::size_t p = 0; p < perm.size(); ++p) pos[perm[p]] = static_cast<int>(p);
            decided_level[h] = 1;
            if (constraints_ok() && bt(li + 1)) return true;
            decided_level[h] = 0;
        } while (std::next_permutation(perm.begin(), perm.end(), [&](int a, int b) {
            return roots[a] < roots[b];
        }));
        for (int i : levels[h]) pos[i] = -1;
        return false;
    };
    if (!bt(0)) return false;

    out_order.assign(n, 0);
    std::iota(out_order.begin(), out_order.end(), 0);
    std::sort(out_order.begin(), out_order.end(), [&](int a, int b) {
        if (hs[a] != hs[b]) return hs[a] < hs[b];
        return pos[a] < pos[b];
    });
    return true;
}

// Seeded deterministic permutation search, used when no height-compatible
// order exists (B4). std::shuffle is implementation-defined, so Fisher-Yates
// is spelled out.
inline bool solve_by_search(const std::vector<Coords>& roots, const OrderConstraints& oc,
                            std::vector<int>& out_order) {
    const int n = static_cast<int>(roots.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return roots[a] < roots[b]; });
    std::mt19937 rng(0x5eed);
    std::vector<int> pos(n);
    for (int attempt = 0; attempt < 500000; ++attempt) {
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
            std::swap(perm[i], perm[j]);
        }
        for (int p = 0; p < n; ++p) pos[perm[p]] = p;
        if (order_satisfies(oc, pos)) {
            out_order = perm;
            return true;
        }
    }
    return false;
}

inline std::vector<Coords> canonical_order(const std::vector<Coords>& roots) {
    auto hs = heights_of(roots);
    auto oc = overlap_constraints(roots);
    std::vector<int> order;
    bool solved = false;
    if (oc.multi_diamond_triples == 0) {
        solved = solve_height_tiebreaks(roots, hs, oc, order);
        if (!solved) solved = solve_by_search(roots, oc, order);
    }
    if (!solved) {
        // no admissible order exists (or the graph is not even a diamond
        // graph); fall back to (height, lex) and let verification report it
        order.resize(roots.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(hs[a], roots[a]) < std::pair(hs[b], roots[b]);
        });
    }
    std::vector<Coords> out;
    out.reserve(roots.size());
    for (int i : order) out.push_back(roots[i]);
    return out;
}

}  // namespace detail

class RootSystem {
public:
    DynkinType dynkin_type;
    int rank = 0;
    int dim = 0;
    std::vector<Root> positive_roots;          // in the fixed total order
    std::vector<int> simple_indices;           // indices into positive_roots
    ExactVector rho;                           // doubled coordinates
    std::vector<std::vector<long long>> gram;  // dot products of doubled vectors

    int num_roots() const { return static_cast<int>(positive_roots.size()); }

    const Root& root(int i) const { return positive_roots[i]; }
    const Root& simple_root(int k) const { return positive_roots[simple_indices[k]]; }

    std::optional<int> find_root(const ExactVector& v) const {
        Coords c(dim);
        for (int i = 0; i < dim; ++i) {
            if (v[i] > std::numeric_limits<long long>::max() / 4) return std::nullopt;
            c[i] = static_cast<long long>(v[i]);
        }
        auto it = index_by_coords_.find(c);
        if (it == index_by_coords_.end()) return std::nullopt;
        return it->second;
    }

    // index of e_i + e_j in R+, or -1
    int sum_index(int i, int j) const { return sum_index_[i][j]; }
    // decompositions e = e_i + e_j (i < j) of root e
    const std::vector<std::pair<int, int>>& decompositions(int e) const { return decomps_[e]; }
    int height(int i) const { return heights_[i]; }

    // action of the simple reflection k on root i: (root index, sign)
    std::pair<int, int> simple_reflection(int k, int i) const {
        int v = simple_tables_[k][i];
        return {std::abs(v) - 1, v > 0 ? 1 : -1};
    }

    const std::array<long long, 8>& packed_root(int i) const { return packed_[i]; }

    friend RootSystem build_root_system(DynkinType, int, bool);

private:
    std::map<Coords, int> index_by_coords_;
    std::vector<std::vector<int16_t>> sum_index_;
    std::vector<std::vector<std::pair<int, int>>> decomps_;
    std::vector<std::vector<int16_t>> simple_tables_;
    std::vector<int> heights_;
    std::vector<std::array<long long, 8>> packed_;
};

inline long long weyl_order(DynkinType t, int n) {
    auto fact = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (t) {
        case DynkinType::A: return fact(n + 1);
        case DynkinType::B:
        case DynkinType::C: return (1LL << n) * fact(n);
        case DynkinType::D: return (1LL << (n - 1)) * fact(n);
        case DynkinType::G2: return 12;
        case DynkinType::F4: return 1152;
    }
    return 0;
}

inline ExactVector reflect_vector(const ExactVector& v, const ExactVector& e) {
    // v - (2<v,e>/<e,e>) e, exact; total on the weight lattice
    const Bigint num = 2 * dot(v, e);
    const Bigint den = dot(e, e);
    ExactVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Bigint t = v[i] * den - num * e[i];
        if (t % den != 0)
            throw Error("reflection left the doubled-integer lattice at " + v.str());
        out[i] = t / den;
    }
    return out;
}

inline ExactVector reflect(const RootSystem& sys, const Root& e, const ExactVector& v) {
    (void)sys;
    return reflect_vector(v, e.vector);
}

inline std::optional<Root> root_sum(const RootSystem& sys, const Root& e1, const Root& e2) {
    int k = sys.sum_index(e1.index, e2.index);
    if (k < 0) return std::nullopt;
    return sys.root(k);
}

inline RootSystem build_root_system(DynkinType t, int n, bool large_ok = false) {
    const bool in_table = (t == DynkinType::A && n >= 1 && n <= 6) ||
                          (t == DynkinType::B && n >= 2 && n <= 4) ||
                          (t == DynkinType::C && n >= 2 && n <= 4) ||
                          (t == DynkinType::D && n == 4) || (t == DynkinType::G2 && n == 2) ||
                          (t == DynkinType::F4 && n == 4);
    if (!in_table)
        throw UnsupportedType(
            type_name(t) + std::to_string(n) +
            " is outside the supported table (A1..A6, B2..B4, C2..C4, D4, G2, F4): subset "
            "enumeration costs 2^|R+| and is capped at desk scale");
    if (t == DynkinType::F4 && !large_ok)
        throw UnsupportedType("F4 has 2^24 subsets; pass --large to enable it");

    auto real = detail::realize(t, n);
    auto ordered = detail::canonical_order(real.roots);

    RootSystem sys;
    sys.dynkin_type = t;
    sys.rank = n;
    sys.dim = static_cast<int>(ordered[0].size());
    const int N = static_cast<int>(ordered.size());

    std::map<Coords, int> simple_set;
    for (const auto& s : real.simples) simple_set[s] = 1;

    ExactVector rho(sys.dim);
    for (int i = 0; i < N; ++i) {
        Root r;
        std::vector<Bigint> coords(sys.dim);
        for (int d = 0; d < sys.dim; ++d) coords[d] = ordered[i][d];
        r.vector = ExactVector(std::move(coords));
        r.index = i;
        r.is_simple = simple_set.count(ordered[i]) > 0;
        sys.positive_roots.push_back(std::move(r));
        sys.index_by_coords_[ordered[i]] = i;
        if (sys.positive_roots[i].is_simple) sys.simple_indices.push_back(i);
    }
    // rho is half the sum of positive roots; with doubled storage that is
    // half the sum of the stored vectors
    for (int i = 0; i < N; ++i) rho += sys.positive_roots[i].vector;
    for (int d = 0; d < sys.dim; ++d) {
        if (rho[d] % 2 != 0) throw Error("odd coordinate sum while forming the Weyl vector");
        rho[d] /= 2;
    }
    sys.rho = rho;

    sys.gram.assign(N, std::vector<long long>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) sys.gram[i][j] = detail::dot_ll(ordered[i], ordered[j]);

    sys.sum_index_.assign(N, std::vector<int16_t>(N, -1));
    sys.decomps_.assign(N, {});
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            Coords s(sys.dim);
            for (int d = 0; d < sys.dim; ++d) s[d] = ordered[i][d] + ordered[j][d];
            auto it = sys.index_by_coords_.find(s);
            if (it != sys.index_by_coords_.end()) {
                sys.sum_index_[i][j] = static_cast<int16_t>(it->second);
                if (i < j) sys.decomps_[it->second].emplace_back(i, j);
            }
        }

    sys.heights_ = detail::heights_of(ordered);

    sys.simple_tables_.assign(sys.simple_indices.size(), std::vector<int16_t>(N));
    for (std::size_t k = 0; k < sys.simple_indices.size(); ++k) {
        const ExactVector& s = sys.positive_roots[sys.simple_indices[k]].vector;
        for (int i = 0; i < N; ++i) {
            ExactVector img = reflect_vector(sys.positive_roots[i].vector, s);
            auto pos = sys.find_root(img);
            if (pos) {
                sys.simple_tables_[k][i] = static_cast<int16_t>(*pos + 1);
            } else {
                auto neg = sys.find_root(-img);
                if (!neg) throw Error("simple reflection left the root system");
                sys.simple_tables_[k][i] = static_cast<int16_t>(-(*neg + 1));
            }
        }
    }

    sys.packed_.assign(N, {});
    for (int i = 0; i < N; ++i)
        for (int d = 0; d < sys.dim; ++d) sys.packed_[i][d] = ordered[i][d];

    return sys;
}

// --- Weyl group -----------------------------------------------------------

struct WeylElement {
    std::vector<int> word;          // reduced word in simple reflection indices
    std::vector<int16_t> action;    // action[i] = +-(j+1): w * e_i = sign e_j
    int length = 0;                 // = #{e in R+ : w*e in R-}

    std::pair<int, int> apply(int root_index) const {
        int v = action[root_index];
        return {std::abs(v) - 1, v > 0 ? 1 : -1};
    }
};

inline std::vector<int16_t> compose_actions(const std::vector<int16_t>& outer,
                                            const std::vector<int16_t>& inner) {
    // (outer . inner)[i]: apply inner first
    std::vector<int16_t> r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        int v = inner[i];
        int w = outer[std::abs(v) - 1];
        r[i] = static_cast<int16_t>(v > 0 ? w : -w);
    }
    return r;
}

inline int action_length(const std::vector<int16_t>& action) {
    int len = 0;
    for (int16_t v : action)
        if (v < 0) ++len;
    return len;
}

inline ExactVector apply_to_vector(const RootSystem& sys, const WeylElement& w,
                                   const ExactVector& v) {
    // walk the reduced word right-to-left
    ExactVector out = v;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        out = reflect_vector(out, sys.simple_root(*it).vector);
    return out;
}

constexpr long long kDefaultWeylCap = 1152;

inline std::vector<WeylElement> enumerate_weyl_group(const RootSystem& sys, long long cap = 0) {
    if (cap <= 0) cap = kDefaultWeylCap;
    const int N = sys.num_roots();
    const int ns = static_cast<int>(sys.simple_indices.size());

    std::vector<std::vector<int16_t>> gens(ns);
    for (int k = 0; k < ns; ++k) {
        gens[k].resize(N);
        for (int i = 0; i < N; ++i) {
            auto [j, s] = sys.simple_reflection(k, i);
            gens[k][i] = static_cast<int16_t>(s * (j + 1));
        }
    }

    std::vector<WeylElement> out;
    std::map<std::vector<Bigint>, int> seen;  // keyed by w * rho (rho is regular)

    WeylElement id;
    id.action.resize(N);
    for (int i = 0; i < N; ++i) id.action[i] = static_cast<int16_t>(i + 1);
    id.length = 0;
    seen[sys.rho.coords()] = 0;
    out.push_back(std::move(id));
    std::vector<ExactVector> rho_img{sys.rho};

    std::size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        std::size_t frontier_end = out.size();
        for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx)
            for (int k = 0; k < ns; ++k) {
                ExactVector img = reflect_vector(rho_img[idx], sys.simple_root(k).vector);
                if (seen.count(img.coords())) continue;
                if (static_cast<long long>(out.size()) >= cap)
                    throw CapExceeded("Weyl group enumeration exceeded cap " +
                                      std::to_string(cap));
                WeylElement w;
                w.word.reserve(out[idx].word.size() + 1);
                w.word.push_back(k);
                w.word.insert(w.word.end(), out[idx].word.begin(), out[idx].word.end());
                w.action = compose_actions(gens[k], out[idx].action);
                w.length = action_length(w.action);
                seen[img.coords()] = static_cast<int>(out.size());
                rho_img.push_back(std::move(img));
                out.push_back(std::move(w));
            }
        frontier_begin = frontier_end;
    }
    return out;
}

// the element acting as -1 on V, when the type has one
inline std::optional<int> minus_one_element(const std::vector<WeylElement>& group) {
    for (std::size_t i = 0; i < group.size(); ++i) {
        bool all = true;
        for (std::size_t r = 0; r < group[i].action.size(); ++r)
            if (group[i].action[r] != -static_cast<int>(r + 1)) {
                all = false;
                break;
            }
        if (all) return static_cast<int>(i);
    }
    return std::nullopt;
}

}  // namespace weylhom
