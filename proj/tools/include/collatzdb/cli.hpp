#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace collatzdb::cli {

enum ExitCode : int {
    kOk = 0,            // success, or a true verdict
    kFalseVerdict = 1,  // a verification returned false
    kUsageError = 2,    // bad arguments or a violated precondition
    kUndetermined = 3,  // exact iteration did not settle within the step budget
    kInternalError = 4, // an invariant that should always hold failed
};

// Parsed command line. Numeric fields hold their defaults until set.
struct RunConfig {
    std::string command;  // "graph modular", "conj phi", ...
    std::string map = "collatz";
    std::string map_file;
    std::uint32_t p = 2;
    unsigned k = 0;
    std::uint64_t m = 0;
    std::int64_t b = 1;
    std::uint64_t l_max = 0;
    std::size_t max_steps = 10'000;
    unsigned max_len = 8;
    std::string format = "text";
    std::string output;

    std::string input;     // graph JSON for `graph line` / `graph transpose`
    std::string exact;     // conj phi --exact
    std::string truncated; // conj phi --truncated
    std::string inverse;   // conj phi --inverse
    std::string order = "lsb";
    std::string word;
    std::string sequence;
    std::string n;
    std::string mode = "exact";
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatzdb::cli
