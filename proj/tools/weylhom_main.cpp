#include "weylhom/pipeline.hpp"
#include "weylhom/report.hpp"
#include "weylhom/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

struct CommonArgs {
    std::string type_str;
    int rank = 0;
    bool large = false;
    std::string format = "text";
    std::string emit_dot;
    std::vector<long long> primes;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_primes = true) {
    cmd->add_option("--type", args.type_str, "Dynkin type: A, B, C, D, G2, F4")->required();
    cmd->add_option("--rank", args.rank, "rank of the system")->required();
    cmd->add_flag("--large", args.large, "allow the 2^24-subset F4 run");
    cmd->add_option("--emit-dot", args.emit_dot, "write one DOT file per weight component");
    if (with_primes)
        cmd->add_option("--primes", args.primes,
                        "primes for mod-p homology (default: all primes <= max rank)")
            ->delimiter(',');
}

weylhom::DynkinType parse_type_or_throw(const std::string& s) {
    auto t = weylhom::parse_type(s);
    if (!t) throw weylhom::UnsupportedType("unknown Dynkin type '" + s + "'");
    return *t;
}

int run_compute_mode(const CommonArgs& args, const std::string& out_dir, bool export_only) {
    weylhom::ComputeOptions opts;
    opts.primes = args.primes;
    opts.large_ok = args.large;
    auto res = weylhom::run_compute(parse_type_or_throw(args.type_str), args.rank, opts);

    if (!args.emit_dot.empty()) weylhom::emit_dot_files(res.system, res.components, args.emit_dot);
    if (export_only) {
        weylhom::emit_matrix_files(res.system, res.components, out_dir);
        std::cerr << "wrote " << res.components.size() << " matrix files to " << out_dir << "\n";
        return res.summary.violations.empty() ? 0 : 2;
    }

    if (args.format == "json")
        std::cout << weylhom::compute_to_json(res).dump(2) << "\n";
    else if (args.format == "csv")
        weylhom::write_compute_csv(std::cout, res);
    else
        weylhom::write_compute_text(std::cout, res);

    if (!res.summary.violations.empty()) {
        for (const auto& v : res.summary.violations) std::cerr << "VIOLATION: " << v << "\n";
        return 2;
    }
    return 0;
}

int run_verify_mode(const CommonArgs& args, int samples) {
    auto sys =
        weylhom::build_root_system(parse_type_or_throw(args.type_str), args.rank, args.large);
    weylhom::VerifyOptions vopts;
    if (samples > 0) vopts.action_samples = samples;
    auto rep = weylhom::verify_system(sys, vopts);
    weylhom::write_verification_text(std::cout, rep);
    if (!args.emit_dot.empty()) {
        auto comps = weylhom::decompose(sys);
        weylhom::emit_dot_files(sys, comps, args.emit_dot);
    }
    return rep.all_pass() ? 0 : 2;
}

int run_audit_mode(const CommonArgs& args) {
    weylhom::ComputeOptions opts;
    opts.primes = args.primes;
    opts.large_ok = args.large;
    auto res = weylhom::run_compute(parse_type_or_throw(args.type_str), args.rank, opts);
    bool violation = false;
    weylhom::Json out = weylhom::Json::object();
    for (long long p : res.primes) {
        auto entries = weylhom::vanishing_audit(res.reports, p);
        weylhom::Json list = weylhom::Json::array();
        for (const auto& e : entries) {
            weylhom::Json je;
            je["weight"] = weylhom::weight_to_json(e.weight);
            je["rank"] = e.rank_of_weight;
            je["degrees"] = e.degrees;
            je["divides"] = (e.rank_of_weight % p == 0);
            if (e.rank_of_weight % p != 0) violation = true;
            list.push_back(std::move(je));
        }
        out[std::to_string(p)] = std::move(list);
    }
    if (args.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& [p, list] : out.items()) {
            std::cout << "p = " << p << ": " << list.size()
                      << " weights with nonzero F_p homology\n";
            for (auto& je : list) {
                std::cout << "  weight " << je["weight"].dump() << " rank " << je["rank"]
                          << " degrees " << je["degrees"].dump()
                          << (je["divides"].get<bool>() ? "" : "  <-- rank not divisible") << "\n";
            }
        }
    }
    return violation ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight-graded chain complexes of positive root systems: exact homology and "
                 "structure verification"};
    app.require_subcommand(1);

    CommonArgs compute_args, verify_args, audit_args, export_args;
    std::string export_out;
    int verify_samples = 0;

    auto* compute = app.add_subcommand("compute", "compute per-weight integral and mod-p homology");
    add_common(compute, compute_args);
    compute->add_option("--format", compute_args.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "run the full structural verification suite");
    add_common(verify, verify_args, false);
    verify->add_option("--samples", verify_samples, "random samples for the action law checks");

    auto* audit = app.add_subcommand("audit", "list weights with nonzero mod-p homology");
    add_common(audit, audit_args);
    audit->add_option("--format", audit_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* exp = app.add_subcommand("export", "write per-component boundary matrices");
    add_common(exp, export_args, false);
    exp->add_option("--out", export_out, "output directory for matrix files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) return run_compute_mode(compute_args, "", false);
        if (verify->parsed()) return run_verify_mode(verify_args, verify_samples);
        if (audit->parsed()) return run_audit_mode(audit_args);
        if (exp->parsed()) return run_compute_mode(export_args, export_out, true);
    } catch (const weylhom::UnsupportedType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const weylhom::TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 2;
    } catch (const weylhom::SquareNotZero& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 2;
    } catch (const weylhom::MultipleDiamonds& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 2;
    } catch (const weylhom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
