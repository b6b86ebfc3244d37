#pragma once

/**
 * @file cli.hpp
 * @brief Batch verification commands behind the `harmval` executable.
 *
 * Exit codes: 0 every check passed, 1 a mathematical check failed (the
 * counterexample goes to the error stream), 2 invalid input.
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace harmval::cli {

enum class ExitCode : int { Ok = 0, CheckFailed = 1, InvalidInput = 2 };

enum class Format { Table, Csv, Json };

enum class Command { VerifyTheorem1, SeriesCheck, Sequence, Lemma1 };

struct RunConfig {
    Command command = Command::VerifyTheorem1;
    std::vector<std::uint64_t> primes;
    std::vector<long> a_values;
    std::uint64_t n_max = 0;
    std::size_t extra_order = 5;
    std::string which = "u";
    bool all_records = false;
    Format format = Format::Table;
    std::optional<std::string> output_path;
    std::size_t jobs = 1;
};

/// Parses "1,2,-3" and "lo..hi" ranges (mixable) into integers, in order.
/// Throws std::invalid_argument on malformed input.
std::vector<long> parse_int_list(const std::string& text);

/// Runs a command on an already-validated config; records go to `out`, logs to `err`.
ExitCode execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmval::cli
