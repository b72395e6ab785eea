// Subcommand implementations for the qmirror CLI.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmirror::cli {

// Exit codes: 0 success, 1 usage, 2 validation, 3 engine.
struct cli_error : std::runtime_error {
    cli_error(int code, std::string kind, const std::string& message,
              std::optional<int> step = {})
        : std::runtime_error(message), code(code), kind(std::move(kind)), step(step) {}

    int code;
    std::string kind;
    std::optional<int> step;
};

struct common_opts {
    bool json = false;
    double tolerance = 0.0;  // display threshold for text output only
};

struct simulate_opts : common_opts {
    std::string script_path;  // empty = no script
    std::string state;        // "a,b" override (parse_amplitude forms)
    std::optional<std::uint64_t> seed;
};

struct decompose_opts : common_opts {
    std::string matrix_path;  // "-" reads stdin
};

struct fuzzy_opts : common_opts {
    std::size_t n = 2;
};

struct logic_opts : common_opts {
    std::string script_path;
    std::string profile = "G";
    bool allow_cloning = false;
    std::vector<std::string> assumptions;  // sequents received as givens
};

struct border_opts : common_opts {
    int input_bit = 0;
    std::uint64_t seed = 0;
    bool allow_cloning = false;
};

int run_simulate(const simulate_opts& opts);
int run_decompose(const decompose_opts& opts);
int run_fuzzy(const fuzzy_opts& opts);
int run_logic(const logic_opts& opts);
int run_border(const border_opts& opts);

} // namespace qmirror::cli
