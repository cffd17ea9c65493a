#ifndef POLYTUPLE_ERRORS_HPP
#define POLYTUPLE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polytuple {

// Malformed or out-of-contract input (bad indices, missing flags, bad parameters).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (subset counts, candidate counts, resampling caps) was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Resampling loop exceeded its round cap; carries the round count for diagnostics.
struct nontermination_error : resource_error {
    nontermination_error(const std::string& what, uint64_t rounds_done)
        : resource_error(what), rounds(rounds_done) {}
    uint64_t rounds;
};

// A construction that is certified on the fly failed its own certificate.
struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

// Process exit codes used by the CLI.
enum ExitCode : int {
    exit_ok = 0,
    exit_violations = 1,
    exit_input = 2,
    exit_resource = 3,
    exit_indeterminate = 4,
};

}  // namespace polytuple

#endif
