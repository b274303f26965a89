#include "bargain/commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bargain/oracle.hpp"
#include "bargain/problem.hpp"
#include "bargain/solver.hpp"
#include "bargain/threat.hpp"

namespace bargain {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kInscribeSegments = 256;  // chords used when the polygon method
                                        // runs on an analytic frontier

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::bad_parameter, "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SolverConfig effective_config(const ProblemFile& problem, const SolveOptions& options,
                              bool record_trace = false) {
    SolverConfig cfg;
    cfg.tol = options.tol ? *options.tol : problem.tol.value_or(cfg.tol);
    cfg.max_iter = options.max_iter ? *options.max_iter : problem.max_iter.value_or(cfg.max_iter);
    cfg.record_trace = record_trace;
    return cfg;
}

Solution run_method(const ProblemFile& problem, const std::string& method,
                    const SolverConfig& cfg, double resolution) {
    const bool is_polygon = problem.kind == ProblemFile::Kind::polygon;
    if (method == "polygon")
        return solve_polygon(is_polygon ? to_polygon(problem)
                                        : inscribe_polygon(to_frontier(problem), kInscribeSegments),
                             cfg);
    if (method == "frontier")
        return is_polygon ? solve_polygon_by_frontier(to_polygon(problem), cfg)
                          : solve_frontier(to_frontier(problem), cfg);
    if (method == "oracle") {
        PointCloud cloud = is_polygon ? discretize(to_polygon(problem), resolution)
                                      : discretize(to_frontier(problem), resolution);
        std::vector<std::vector<Point>> passes;
        Solution sol;
        sol.point = solve_cloud(cloud, &passes);
        sol.iterations = static_cast<int>(passes.size());
        sol.converged = true;
        return sol;
    }
    throw Error(Errc::bad_parameter, "unknown method '" + method + "'");
}

ordered_json result_json(const Solution& sol, const std::string& method) {
    ordered_json doc;
    doc["c"] = ordered_json::array({sol.point.x, sol.point.y});
    doc["iterations"] = sol.iterations;
    doc["converged"] = sol.converged;
    doc["method"] = method;
    return doc;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::vector<TraceRecord>& trace, std::ostream& out) {
    out << "n,x,y,z,w,tx,ty,diam\n";
    for (const TraceRecord& r : trace)
        out << r.n << ',' << format_g17(r.x) << ',' << format_g17(r.y) << ','
            << format_g17(r.z) << ',' << format_g17(r.w) << ',' << format_g17(r.t.x)
            << ',' << format_g17(r.t.y) << ',' << format_g17(r.diam) << '\n';
}

} // namespace

int cmd_solve(const std::string& input_path, const SolveOptions& options,
              std::ostream& out, std::ostream& err) {
    try {
        const ProblemFile problem = parse_problem(read_file(input_path));
        const SolverConfig cfg = effective_config(problem, options);

        if (options.method != "all") {
            const Solution sol = run_method(problem, options.method, cfg, options.resolution);
            out << result_json(sol, options.method).dump() << '\n';
            return sol.converged ? exit_ok : exit_not_converged;
        }

        bool all_converged = true;
        std::vector<Point> points;
        ordered_json results = ordered_json::array();
        for (const char* method : {"polygon", "frontier", "oracle"}) {
            const Solution sol = run_method(problem, method, cfg, options.resolution);
            results.push_back(result_json(sol, method));
            points.push_back(sol.point);
            all_converged = all_converged && sol.converged;
        }
        double deviation = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                deviation = std::max({deviation, std::abs(points[i].x - points[j].x),
                                      std::abs(points[i].y - points[j].y)});
        ordered_json doc;
        doc["method"] = "all";
        doc["results"] = results;
        doc["max_deviation"] = deviation;
        out << doc.dump() << '\n';
        return all_converged ? exit_ok : exit_not_converged;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
}

int cmd_trace(const std::string& input_path, const std::string& output_path,
              const SolveOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const ProblemFile problem = parse_problem(read_file(input_path));
        const SolverConfig cfg = effective_config(problem, options, /*record_trace=*/true);

        const Solution sol = problem.kind == ProblemFile::Kind::polygon
                                 ? solve_polygon(to_polygon(problem), cfg)
                                 : solve_frontier(to_frontier(problem), cfg);
        if (output_path.empty()) {
            write_csv(sol.trace, out);
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file)
                throw Error(Errc::bad_parameter, "cannot open output file '" + output_path + "'");
            write_csv(sol.trace, file);
        }
        return sol.converged ? exit_ok : exit_not_converged;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
}

int cmd_simulate(const std::string& input_path, std::uint64_t samples, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
    try {
        const ProblemFile problem = parse_problem(read_file(input_path));

        CornerPair corners;
        if (problem.kind == ProblemFile::Kind::polygon) {
            corners = corner_points(to_polygon(problem));
        } else {
            const Frontier f = to_frontier(problem);
            corners.top = {f.x_lo(), f.y_at_lo()};
            corners.right = {f.x_hi(), f.y_at_hi()};
        }

        const Point t = threat_point(corners);
        const ThreatSampleStats stats = simulate_threat_mean(corners, samples, seed);
        auto z_score = [](double diff, double se) -> ordered_json {
            if (se > 0.0) return std::abs(diff) / se;
            if (diff == 0.0) return 0.0;
            return nullptr;  // zero spread but nonzero gap: undefined
        };

        ordered_json doc;
        doc["right"] = ordered_json::array({corners.right.x, corners.right.y});
        doc["top"] = ordered_json::array({corners.top.x, corners.top.y});
        doc["t"] = ordered_json::array({t.x, t.y});
        doc["mean"] = ordered_json::array({stats.mean.x, stats.mean.y});
        doc["standard_error"] =
            ordered_json::array({stats.standard_error.x, stats.standard_error.y});
        doc["z"] = ordered_json::array({z_score(stats.mean.x - t.x, stats.standard_error.x),
                                        z_score(stats.mean.y - t.y, stats.standard_error.y)});
        doc["samples"] = stats.n;
        doc["seed"] = seed;
        out << doc.dump() << '\n';
        return exit_ok;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
}

} // namespace bargain
