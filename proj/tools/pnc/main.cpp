// pnc: invariants, indicator functions and evaluation codes of projective
// nested products of fields.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pnc/error.hpp"

namespace {

void add_sequence_options(CLI::App* cmd, pnc::cli::SequenceArgs& args) {
    cmd->add_option("--p", args.p, "characteristic (default: smallest prime factor of d_0)");
    cmd->add_option("--d", args.sizes, "nested sequence d_0,...,d_n")->required();
    cmd->add_option("--q", args.q, "ambient field size (default: d_n)");
    cmd->add_option("--modulus", args.modulus,
                    "monic irreducible modulus of F_q over F_p, coefficients highest degree first, e.g. 1,1,1");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace pnc::cli;

    CLI::App app{"Invariants, indicator functions and evaluation codes of projective nested products of fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pnc 0.1.0");

    SequenceArgs seq;

    auto* invariants = app.add_subcommand("invariants", "closed-form invariant report");
    add_sequence_options(invariants, seq);
    bool with_oracle = false;
    unsigned threads = 1;
    invariants->add_flag("--oracle", with_oracle, "also cross-check against the rank oracle (|X| <= 2000)");
    invariants->add_option("--threads", threads, "worker threads for the oracle")->check(CLI::Range(1u, 256u));

    auto* indicator = app.add_subcommand("indicator", "indicator function of a point");
    add_sequence_options(indicator, seq);
    std::string point;
    bool standard = false;
    indicator->add_option("--point", point, "point such as (0:1:a)")->required();
    indicator->add_flag("--standard", standard, "also print the unique standard indicator");

    auto* mindist = app.add_subcommand("min-distance", "exhaustive minimum distance of C_X(d)");
    add_sequence_options(mindist, seq);
    MinDistanceArgs md;
    mindist->add_option("--degree", md.degree, "degree d")->required();
    mindist->add_option("--threads", md.threads, "worker threads")->check(CLI::Range(1u, 256u));
    mindist->add_option("--cap", md.cap, "maximum number of projective message classes");

    auto* generator = app.add_subcommand("generator", "generator matrix of C_X(d), one line per point");
    add_sequence_options(generator, seq);
    std::uint64_t gen_degree = 0;
    generator->add_option("--degree", gen_degree, "degree d")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force rank oracles against the closed forms");
    add_sequence_options(oracle, seq);
    OracleArgs oa;
    oracle->add_flag("--all-points", oa.all_points, "compare v_P for every point");
    oracle->add_option("--check", oa.checks, "v-point | hilbert | reg-delta | uniqueness | zero-function")
        ->check(CLI::IsMember({"v-point", "hilbert", "reg-delta", "uniqueness", "zero-function"}));
    oracle->add_option("--max-degree", oa.max_degree, "largest degree for the hilbert check (default reg H + 2)");
    oracle->add_option("--threads", oa.threads, "worker threads")->check(CLI::Range(1u, 256u));

    auto* verify = app.add_subcommand("verify-tables", "recompute the reference tables");
    std::string table = "all";
    std::string verify_format = "text";
    unsigned verify_threads = 1;
    verify->add_option("--table", table, "1, 2, 3 or all")
        ->check(CLI::IsMember({"1", "2", "3", "all"}))
        ->capture_default_str();
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    verify->add_option("--threads", verify_threads, "worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*invariants) return run_invariants(seq, with_oracle, threads, std::cout);
        if (*indicator) return run_indicator(seq, point, standard, std::cout);
        if (*mindist) return run_min_distance(seq, md, std::cout, std::cerr);
        if (*generator) return run_generator(seq, gen_degree, std::cout);
        if (*oracle) return run_oracle(seq, oa, std::cout);
        if (*verify) return run_verify_tables(table, verify_format, verify_threads, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "pnc: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kInvalidInput;
}
