#pragma once

/*
 * Output rendering: canonical JSON (byte-stable across runs), plain text,
 * CSV, per-component DOT graphs and sparse matrix dumps.
 */

#include "weylhom/pipeline.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace weylhom {

using Json = nlohmann::ordered_json;

inline Json weight_to_json(const WeightKey& w) {
    Json a = Json::array();
    for (std::size_t i = 0; i < w.dim(); ++i) a.push_back(to_int64(w[i]));
    return a;
}

inline Json report_to_json(const HomologyReport& rep) {
    Json h = Json::object();
    for (int k = rep.d_min; k <= rep.d_max; ++k) {
        const auto& d = *rep.at(k);
        Json entry = Json::object();
        entry["free"] = d.free_rank;
        Json tors = Json::array();
        for (const auto& t : d.torsion) tors.push_back(to_int64(t));
        entry["torsion"] = tors;
        Json modp = Json::object();
        for (const auto& [p, dim] : d.mod_p) modp[std::to_string(p)] = dim;
        entry["modp"] = modp;
        h[std::to_string(k)] = entry;
    }
    return h;
}

inline Json compute_to_json(const ComputeResult& res) {
    Json j;
    j["system"] = {{"type", type_name(res.system.dynkin_type)},
                   {"rank", res.system.rank},
                   {"num_roots", res.system.num_roots()},
                   {"weyl_order", static_cast<long long>(res.group.size())}};
    Json comps = Json::array();
    for (std::size_t i = 0; i < res.components.size(); ++i) {
        const auto& c = res.components[i];
        Json jc;
        jc["weight"] = weight_to_json(c.weight);
        jc["size"] = static_cast<long long>(c.vertices.size());
        jc["rank"] = c.rank;
        jc["homology"] = report_to_json(res.reports[i]);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    Json summary;
    summary["betti"] = res.summary.betti;
    summary["torsion_primes"] = res.summary.torsion_primes;
    summary["violations"] = res.summary.violations;
    j["summary"] = std::move(summary);
    return j;
}

inline std::string torsion_str(const std::vector<Bigint>& torsion) {
    if (torsion.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) s += " ";
        s += torsion[i].str();
    }
    return s;
}

inline void write_compute_text(std::ostream& os, const ComputeResult& res) {
    os << type_name(res.system.dynkin_type) << res.system.rank << ": " << res.system.num_roots()
       << " positive roots, |W| = " << res.group.size() << ", " << res.components.size()
       << " weight components\n";
    os << "betti:";
    for (auto b : res.summary.betti) os << " " << b;
    os << "\n";
    os << "torsion primes:";
    if (res.summary.torsion_primes.empty()) os << " none";
    for (auto p : res.summary.torsion_primes) os << " " << p;
    os << "\n\n";
    os << "weight | size | rank | degree: free [torsion] {p:dim}\n";
    for (std::size_t i = 0; i < res.components.size(); ++i) {
        const auto& c = res.components[i];
        const auto& rep = res.reports[i];
        os << c.weight.str() << " | " << c.vertices.size() << " | " << c.rank << " |";
        for (int k = rep.d_min; k <= rep.d_max; ++k) {
            const auto& d = *rep.at(k);
            bool interesting = d.free_rank != 0 || !d.torsion.empty();
            for (const auto& [p, dim] : d.mod_p) interesting = interesting || dim != 0;
            if (!interesting) continue;
            os << " " << k << ": " << d.free_rank << " [" << torsion_str(d.torsion) << "]";
            if (!d.mod_p.empty()) {
                os << " {";
                bool first = true;
                for (const auto& [p, dim] : d.mod_p) {
                    if (!first) os << " ";
                    os << p << ":" << dim;
                    first = false;
                }
                os << "}";
            }
        }
        os << "\n";
    }
    if (!res.summary.violations.empty()) {
        os << "\nviolations:\n";
        for (const auto& v : res.summary.violations) os << "  " << v << "\n";
    }
}

inline void write_compute_csv(std::ostream& os, const ComputeResult& res) {
    os << "weight,size,rank,degree,free,torsion";
    for (auto p : res.primes) os << ",dim_mod_" << p;
    os << "\n";
    for (std::size_t i = 0; i < res.components.size(); ++i) {
        const auto& c = res.components[i];
        const auto& rep = res.reports[i];
        for (int k = rep.d_min; k <= rep.d_max; ++k) {
            const auto& d = *rep.at(k);
            os << "\"" << c.weight.str() << "\"," << c.vertices.size() << "," << c.rank << "," << k
               << "," << d.free_rank << ",\"" << torsion_str(d.torsion) << "\"";
            for (auto p : res.primes) {
                auto it = d.mod_p.find(p);
                os << "," << (it == d.mod_p.end() ? 0 : it->second);
            }
            os << "\n";
        }
    }
}

// --- file exports -----------------------------------------------------------

inline std::string weight_file_stem(const WeightKey& w) {
    const std::string s = w.str();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream o;
    o << "weight_" << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
}

inline void write_dot(const RootSystem& sys, const WeightComponent& comp, std::ostream& os) {
    (void)sys;
    os << "graph \"" << comp.weight.str() << "\" {\n";
    for (const auto& v : comp.vertices) {
        os << "  \"0x" << std::hex << v.bits << std::dec << "\" [label=\"0x" << std::hex << v.bits
           << std::dec << " deg " << v.degree() << "\"];\n";
    }
    for (const auto& e : comp.edges) {
        os << "  \"0x" << std::hex << comp.vertices[e.big].bits << "\" -- \"0x"
           << comp.vertices[e.small].bits << std::dec << "\" [label=\"" << (e.sign > 0 ? "+1" : "-1")
           << "\"];\n";
    }
    os << "}\n";
}

inline void emit_dot_files(const RootSystem& sys, const std::vector<WeightComponent>& comps,
                           const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& c : comps) {
        std::ofstream out(std::filesystem::path(dir) / (weight_file_stem(c.weight) + ".dot"));
        write_dot(sys, c, out);
    }
}

// header `degree k rows m cols n`, entry lines `i j v`, 0-based indices
inline void write_matrix_dump(const GradedMatrixComplex& cx, std::ostream& os) {
    for (int t = 0; t < cx.num_degrees(); ++t) {
        const auto& m = cx.mats[t];
        os << "degree " << (cx.d_min + t) << " rows " << m.rows << " cols " << m.cols << "\n";
        for (const auto& [r, c, v] : m.entries) os << r << " " << c << " " << v.str() << "\n";
    }
}

inline void emit_matrix_files(const RootSystem& sys, const std::vector<WeightComponent>& comps,
                              const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& c : comps) {
        auto cx = build_complex(sys, c, Direction::chain);
        std::ofstream out(std::filesystem::path(dir) / (weight_file_stem(c.weight) + ".mtx"));
        write_matrix_dump(cx, out);
    }
}

inline void write_verification_text(std::ostream& os, const VerificationReport& rep) {
    for (const auto& c : rep.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.details.empty()) os << (c.pass ? " (" : ": ") << c.details << (c.pass ? ")" : "");
        os << "\n";
    }
}

}  // namespace weylhom
