#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bargain/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Two-player bargaining solver with a nondeterministic threat"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    double tol = 0.0;
    int max_iter = 0;
    bargain::SolveOptions options;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;

    CLI::App* solve = app.add_subcommand("solve", "Compute the bargaining solution c(S)");
    solve->add_option("--input", input, "problem file (JSON)")->required();
    solve->add_option("--method", options.method, "polygon | frontier | oracle | all")
        ->check(CLI::IsMember({"polygon", "frontier", "oracle", "all"}));
    CLI::Option* solve_tol = solve->add_option("--tol", tol, "stopping tolerance");
    CLI::Option* solve_iter = solve->add_option("--max-iter", max_iter, "iteration cap");
    solve->add_option("--resolution", options.resolution, "oracle grid spacing");

    CLI::App* trace = app.add_subcommand("trace", "Export the iteration trace as CSV");
    trace->add_option("--input", input, "problem file (JSON)")->required();
    trace->add_option("--output", output, "CSV path (stdout when omitted)");
    CLI::Option* trace_tol = trace->add_option("--tol", tol, "stopping tolerance");
    CLI::Option* trace_iter = trace->add_option("--max-iter", max_iter, "iteration cap");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo check of the threat lottery");
    simulate->add_option("--input", input, "problem file (JSON)")->required();
    simulate->add_option("--samples", samples, "number of draws");
    simulate->add_option("--seed", seed, "splitmix64 seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bargain::exit_invalid_input;
    }

    try {
        if (solve->parsed()) {
            if (*solve_tol) options.tol = tol;
            if (*solve_iter) options.max_iter = max_iter;
            return bargain::cmd_solve(input, options, std::cout, std::cerr);
        }
        if (trace->parsed()) {
            if (*trace_tol) options.tol = tol;
            if (*trace_iter) options.max_iter = max_iter;
            return bargain::cmd_trace(input, output, options, std::cout, std::cerr);
        }
        return bargain::cmd_simulate(input, samples, seed, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bargain::exit_invalid_input;
    }
}
