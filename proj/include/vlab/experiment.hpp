#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlab/asymptotics.hpp"
#include "vlab/common.hpp"
#include "vlab/weights.hpp"

namespace vlab {

// Exit codes shared by parse_args/run and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAssertFailed = 2;
inline constexpr int kExitIoError = 3;

struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by parse_args when -h/--help is requested; what() carries the help
// text, and the binary reports it on stdout with a zero exit.
struct help_requested : usage_error {
    explicit help_requested(const std::string& text) : usage_error(text) {}
};

struct ExperimentConfig {
    std::string command;  // compare | count | sseries | denumerant | expsum | vaughan | landau
    std::vector<u64> c;
    std::vector<int> r;
    u64 n = 0;
    u64 n_min = 21;          // comparisons are defined only past N = 20
    u64 n_max = 0;
    WeightKind weight = WeightKind::prime_indicator;
    double arc_exponent = 14.0;  // B in Q = (log N)^B
    u64 prime_cutoff = 100000;   // P for the Euler product
    u64 q_cutoff = 2000;         // Q for the q-expansion partial sum
    double x = 0.0;
    double alpha = 0.0;
    double u = 0.0;  // 0 = default x^(2/5)
    double v = 0.0;
    int k = 2;
    u64 b = 1;                // single coefficient for expsum
    u64 sieve_limit = 0;      // 0 = derived from the command's ranges
    bool classify = false;    // expsum: also print the arc label
    bool include_vanishing = false;
    std::string output_path;  // empty = stdout
    std::string format = "csv";
    std::string assert_spec;  // "ratio:lo,hi" -> exit 2 when violated
};

// Parses and fully validates; throws usage_error with every violated
// constraint listed.
ExperimentConfig parse_args(const std::vector<std::string>& args);

// Executes the configured experiment, writing to the configured destination.
// Returns kExitOk, kExitAssertFailed, or kExitIoError; invalid configs that
// slipped past parsing surface as usage_error.
int run(const ExperimentConfig& config);

// Comparison-table construction, exposed for tests and the acceptance suite.
std::vector<ComparisonRow> build_comparison(const FactorSieve& sieve, const std::vector<u64>& c,
                                            const std::vector<int>& r, u64 n_min, u64 n_max, WeightKind w,
                                            u64 prime_cutoff, bool include_vanishing);

// Serialization helpers shared by run() and the round-trip tests.
std::string comparison_csv(const std::vector<ComparisonRow>& rows, WeightKind w);
std::string format_real(double value);  // 10 significant digits, '.' decimal

}  // namespace vlab
