#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace bargain {

// Exit codes shared by every subcommand: 0 success, 1 invalid input,
// 2 non-convergence. Nothing else is ever returned.
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 1;
inline constexpr int exit_not_converged = 2;

struct SolveOptions {
    std::string method = "polygon";        // polygon | frontier | oracle | all
    std::optional<double> tol;             // command line > problem file > default
    std::optional<int> max_iter;
    double resolution = 1e-3;              // oracle grid spacing
};

// Solves the problem at input_path and writes a single-line JSON result
// document to `out`; diagnostics go to `err`.
int cmd_solve(const std::string& input_path, const SolveOptions& options,
              std::ostream& out, std::ostream& err);

// Solves with tracing and writes the iteration CSV (header
// n,x,y,z,w,tx,ty,diam, 17 significant digits, LF endings) to output_path,
// or to `out` when output_path is empty.
int cmd_trace(const std::string& input_path, const std::string& output_path,
              const SolveOptions& options, std::ostream& out, std::ostream& err);

// Monte Carlo check of the threat lottery: samples the 50/50 corner draw and
// reports the empirical mean against t(S) with per-coordinate z-scores.
int cmd_simulate(const std::string& input_path, std::uint64_t samples,
                 std::uint64_t seed, std::ostream& out, std::ostream& err);

} // namespace bargain
