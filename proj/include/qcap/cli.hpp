#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcap/capacities.hpp"

namespace qcap::cli {

/// Exit codes, stable contract: 0 success, 1 verification failure,
/// 2 argument error, 3 domain error, 4 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

struct CapacityOptions {
    std::string family;                 // depolarizing|erasure|dephasing|bell-diagonal|kraus-file
    std::size_t d = 2;
    double x = 0.0;
    std::vector<double> probs;          // bell-diagonal weights, index a*d+b
    std::string file;                   // kraus-file path
    std::vector<std::string> measures;  // empty -> family default set
    double tol = 1e-8;                  // optimizer objective tolerance
    std::size_t restarts = 8;
    std::uint64_t seed = kDefaultSeed;
};

/// Compute the requested capacity rows for one channel.
CapacityReport make_capacity_report(const CapacityOptions& opt);

struct SweepOptions {
    std::string family;  // depolarizing|erasure
    std::size_t d = 2;
    double x_start = 0.0;
    double x_end = 1.0;
    std::size_t steps = 51;
};

/// Figure-reproduction CSV: header row, 6 fractional digits, '\n' line
/// endings. Erasure rows carry x,C,Q,C_E with C_E = 2*C exactly;
/// depolarizing rows carry x,c1,ce,erasure_upper,fccc_mr,q_hash with
/// fccc_mr blank below the x >= d/(d+1) domain.
void write_sweep_csv(const SweepOptions& opt, std::ostream& out);

/// Parses a probability given as a decimal ("0.5") or fraction ("2/3").
double parse_probability(const std::string& text);

/// Full command dispatch; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace qcap::cli
