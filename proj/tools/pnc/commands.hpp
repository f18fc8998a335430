#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pnc/variety.hpp"

namespace pnc::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kInvalidInput = 2,
    kResourceCap = 3,
};

/// Options shared by every subcommand that works on one sequence.
struct SequenceArgs {
    std::optional<std::uint32_t> p;  // inferred from d_0 when absent
    std::string sizes;               // "2,2,4"
    std::optional<std::uint64_t> q;
    std::string modulus;  // "1,1,1", highest degree first
    std::string format = "text";
};

Variety load_variety(const SequenceArgs& args);

/// Maps a library error kind onto the CLI exit status.
int exit_code_for(const std::exception& e);

int run_invariants(const SequenceArgs& args, bool with_oracle, unsigned threads, std::ostream& out);

int run_indicator(const SequenceArgs& args, const std::string& point, bool standard, std::ostream& out);

struct MinDistanceArgs {
    std::uint64_t degree = 0;
    unsigned threads = 1;
    std::uint64_t cap = 0;  // 0 selects the library default
};
int run_min_distance(const SequenceArgs& args, const MinDistanceArgs& md, std::ostream& out, std::ostream& err);

int run_generator(const SequenceArgs& args, std::uint64_t degree, std::ostream& out);

struct OracleArgs {
    bool all_points = false;
    std::vector<std::string> checks;  // empty: every check
    std::optional<std::uint64_t> max_degree;
    unsigned threads = 1;
};
int run_oracle(const SequenceArgs& args, const OracleArgs& oracle, std::ostream& out);

int run_verify_tables(const std::string& table, const std::string& format, unsigned threads, std::ostream& out);

}  // namespace pnc::cli
