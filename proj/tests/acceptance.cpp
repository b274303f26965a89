// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in code next to each check.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bargain/oracle.hpp"
#include "bargain/problem.hpp"
#include "bargain/solver.hpp"
#include "bargain/threat.hpp"
#include "cli_util.hpp"
#include "support.hpp"

using namespace bargain;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool pass = false;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(name, pass, pass ? "" : detail);
}

std::string fmt_point(Point p) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << p.x << ", " << p.y << ")";
    return os.str();
}

// The 100 random instances shared by the Proposition 1, halving and
// rationality criteria: convex hulls of 20 uniform points in [-10,10]^2.
std::vector<ConvexPolygon> random_instances() {
    std::vector<ConvexPolygon> out;
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 100; ++i)
        out.push_back(validate_convex(testsupport::random_hull(rng, 20, -10.0, 10.0)));
    return out;
}

} // namespace

int main() {
    const SolverConfig cfg{1e-9, 200, true};
    const std::vector<ConvexPolygon> instances = random_instances();
    std::vector<Solution> instance_solutions;
    for (const ConvexPolygon& P : instances)
        instance_solutions.push_back(solve_polygon(P, cfg));

    criterion("symmetric quarter-circle", [&](std::string& detail) {
        const Solution sol = solve_frontier(Frontier::circle({0, 0}, 1.0, 0.0, 1.0), cfg);
        detail = fmt_point(sol.point);
        return sol.converged && std::abs(sol.point.x - 0.7071068) <= 1e-6 &&
               std::abs(sol.point.y - 0.7071068) <= 1e-6;
    });

    criterion("linear frontier polygon", [&](std::string& detail) {
        const Solution sol = solve_polygon(validate_convex({{0, 0}, {2, 0}, {0, 1}}), cfg);
        std::ostringstream os;
        os << fmt_point(sol.point) << " in " << sol.iterations << " iterations";
        detail = os.str();
        return sol.converged && sol.iterations <= 2 &&
               std::abs(sol.point.x - 1.0) <= 1e-12 &&
               std::abs(sol.point.y - 0.5) <= 1e-12;
    });

    criterion("curved asymmetric case", [&](std::string& detail) {
        const Frontier f = Frontier::power(2.0, 0.0, 1.0, 0.0, 1.0);
        const Point frontier_c = solve_frontier(f, cfg).point;
        const Point polygon_c = solve_polygon(inscribe_polygon(f, 255), cfg).point;
        const Point oracle_c = solve_cloud(discretize(f, 1e-3));

        detail = "frontier " + fmt_point(frontier_c) + ", polygon " +
                 fmt_point(polygon_c) + ", oracle " + fmt_point(oracle_c);
        const bool reference = std::abs(frontier_c.x - 0.607971) <= 1e-4 &&
                               std::abs(frontier_c.y - 0.630371) <= 1e-4;
        auto close = [](Point a, Point b) {
            return std::abs(a.x - b.x) <= 5e-3 && std::abs(a.y - b.y) <= 5e-3;
        };
        return reference && close(frontier_c, polygon_c) &&
               close(frontier_c, oracle_c) && close(polygon_c, oracle_c);
    });

    criterion("proposition 1 suite", [&](std::string& detail) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const Prop1Report r = verify_prop1(instances[i], cfg);
            if (!r.pass) {
                detail = "instance " + std::to_string(i) + ": c(T)=" +
                         fmt_point(r.original) + " c(Trim(T))=" + fmt_point(r.trimmed);
                return false;
            }
        }
        detail = "100 instances";
        return true;
    });

    criterion("diameter halving", [&](std::string& detail) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const Solution& sol = instance_solutions[i];
            if (!sol.converged) {
                detail = "instance " + std::to_string(i) + " did not converge";
                return false;
            }
            for (std::size_t n = 0; n + 1 < sol.trace.size(); ++n) {
                if (sol.trace[n + 1].diam > 0.5 * sol.trace[n].diam + 1e-12) {
                    detail = "instance " + std::to_string(i) + " iteration " +
                             std::to_string(n);
                    return false;
                }
            }
            const double diam0 = sol.trace[0].diam;
            const int bound =
                static_cast<int>(std::ceil(std::log2(std::max(diam0 / cfg.tol, 1.0)))) + 1;
            if (sol.iterations > bound) {
                detail = "instance " + std::to_string(i) + ": " +
                         std::to_string(sol.iterations) + " > " + std::to_string(bound);
                return false;
            }
        }
        detail = "100 instances";
        return true;
    });

    criterion("rationality bound", [&](std::string& detail) {
        std::vector<const Solution*> checked;
        for (const Solution& sol : instance_solutions) checked.push_back(&sol);
        const Solution wide =
            solve_polygon(validate_convex({{0, 0}, {2, 0}, {0, 1}}), cfg);
        const Solution inscribed =
            solve_polygon(inscribe_polygon(Frontier::power(2.0, 0.0, 1.0, 0.0, 1.0), 255), cfg);
        checked.push_back(&wide);
        checked.push_back(&inscribed);
        for (std::size_t i = 0; i < checked.size(); ++i) {
            const Solution& sol = *checked[i];
            const Point t0 = sol.trace[0].t;
            if (t0.x > sol.point.x + 1e-9 || t0.y > sol.point.y + 1e-9) {
                detail = "instance " + std::to_string(i) + ": t(S_0)=" + fmt_point(t0) +
                         " c=" + fmt_point(sol.point);
                return false;
            }
        }
        detail = std::to_string(checked.size()) + " instances";
        return true;
    });

    criterion("affine covariance", [&](std::string& detail) {
        std::mt19937_64 rng(424242);
        std::uniform_real_distribution<double> scale(0.1, 10.0);
        std::uniform_real_distribution<double> shift(-5.0, 5.0);
        for (int i = 0; i < 100; ++i) {
            const std::vector<Point> hull = testsupport::random_hull(rng, 20, -10.0, 10.0);
            const double a = scale(rng), b = scale(rng);
            const double p = shift(rng), q = shift(rng);
            std::vector<Point> mapped;
            for (const Point& v : hull) mapped.push_back({a * v.x + p, b * v.y + q});

            const Point c = solve_polygon(validate_convex(hull), cfg).point;
            const Point cm = solve_polygon(validate_convex(mapped), cfg).point;
            const double tol = 1e-6 * std::max(a, b);
            if (std::abs(cm.x - (a * c.x + p)) > tol ||
                std::abs(cm.y - (b * c.y + q)) > tol) {
                detail = "pair " + std::to_string(i) + ": got " + fmt_point(cm) +
                         ", want " + fmt_point({a * c.x + p, b * c.y + q});
                return false;
            }
        }
        detail = "100 pairs";
        return true;
    });

    criterion("monte carlo threat", [&](std::string& detail) {
        const CornerPair corners =
            corner_points(validate_convex({{0, 0}, {1, 0}, {0, 1}}));
        const Point t = threat_point(corners);
        int passes = 0;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const ThreatSampleStats s = simulate_threat_mean(corners, 100000, seed);
            if (std::abs(s.mean.x - t.x) <= 4.0 * s.standard_error.x &&
                std::abs(s.mean.y - t.y) <= 4.0 * s.standard_error.y)
                ++passes;
        }
        detail = std::to_string(passes) + "/50 seeds within 4 standard errors";
        return passes >= 48;
    });

    criterion("frontier bracketing", [&](std::string& detail) {
        std::vector<Frontier> zoo{
            Frontier::circle({0, 0}, 1.0, 0.0, 1.0),
            Frontier::power(2.0, 0.0, 1.0, 0.0, 1.0),
            Frontier::linear(0.0, 2.0, 0.0, 1.0),
            Frontier::polyline({{0, 2}, {1, 1.5}, {2, 0}}),
        };
        std::mt19937_64 rng(17);
        for (int i = 0; i < 20; ++i) {
            const ConvexPolygon P =
                validate_convex(testsupport::random_hull(rng, 20, -10.0, 10.0));
            const CornerPair corners = corner_points(P);
            if (distance(corners.right, corners.top) > 1e-9)
                zoo.push_back(pareto_frontier(P));
        }
        for (std::size_t k = 0; k < zoo.size(); ++k) {
            const Solution sol = solve_frontier(zoo[k], cfg);
            for (std::size_t i = 0; i < sol.trace.size(); ++i) {
                const TraceRecord& r = sol.trace[i];
                bool ok = r.x <= r.z && r.w <= r.y;
                if (i > 0)
                    ok = ok && r.x >= sol.trace[i - 1].x && r.z <= sol.trace[i - 1].z &&
                         r.w >= sol.trace[i - 1].w && r.y <= sol.trace[i - 1].y;
                if (!ok) {
                    detail = "frontier " + std::to_string(k) + " iteration " +
                             std::to_string(i);
                    return false;
                }
            }
        }
        detail = std::to_string(zoo.size()) + " traces";
        return true;
    });

    criterion("cli contract", [&](std::string& detail) {
        using cliutil::problem_path;
        using cliutil::run_cli;

        if (run_cli("solve --input " + problem_path("triangle.json")).exit_code != 0) {
            detail = "valid solve did not exit 0";
            return false;
        }
        if (run_cli("solve --input /no/such/problem.json").exit_code != 1) {
            detail = "invalid input did not exit 1";
            return false;
        }
        if (run_cli("solve --input " + problem_path("quarter_circle.json") +
                    " --method frontier --max-iter 1")
                .exit_code != 2) {
            detail = "non-convergence did not exit 2";
            return false;
        }

        const std::string sim = "simulate --input " + problem_path("triangle.json") +
                                " --samples 100000 --seed 7";
        if (run_cli(sim).out != run_cli(sim).out || run_cli(sim).out.empty()) {
            detail = "seeded rerun not byte-identical";
            return false;
        }
        const std::string all =
            "solve --input " + problem_path("power.json") + " --method all";
        if (run_cli(all).out != run_cli(all).out) {
            detail = "solve rerun not byte-identical";
            return false;
        }

        // CSV trace round trip on every shipped problem.
        int traced = 0;
        for (const auto& entry : fs::directory_iterator(BARGAIN_PROBLEMS_DIR)) {
            if (entry.path().extension() != ".json") continue;
            const auto r = run_cli("trace --input " + entry.path().string());
            if (r.exit_code != 0) {
                detail = "trace failed on " + entry.path().filename().string();
                return false;
            }
            std::string header;
            std::vector<std::vector<double>> rows;
            if (!cliutil::parse_csv(r.out, header, rows) ||
                header != "n,x,y,z,w,tx,ty,diam") {
                detail = "bad CSV header for " + entry.path().filename().string();
                return false;
            }
            const ProblemFile problem = parse_problem(cliutil::slurp(entry.path()));
            SolverConfig trace_cfg;
            trace_cfg.tol = problem.tol.value_or(trace_cfg.tol);
            trace_cfg.max_iter = problem.max_iter.value_or(trace_cfg.max_iter);
            trace_cfg.record_trace = true;
            const Solution sol = problem.kind == ProblemFile::Kind::polygon
                                     ? solve_polygon(to_polygon(problem), trace_cfg)
                                     : solve_frontier(to_frontier(problem), trace_cfg);
            if (rows.size() != sol.trace.size()) {
                detail = "row count mismatch for " + entry.path().filename().string();
                return false;
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const TraceRecord& t = sol.trace[i];
                const std::vector<double> want{static_cast<double>(t.n), t.x, t.y,
                                               t.z,  t.w,  t.t.x, t.t.y, t.diam};
                if (rows[i] != want) {  // %.17g round trips doubles exactly
                    detail = "row " + std::to_string(i) + " mismatch for " +
                             entry.path().filename().string();
                    return false;
                }
            }
            ++traced;
        }
        if (traced < 10) {
            detail = "expected at least 10 shipped problems, traced " +
                     std::to_string(traced);
            return false;
        }
        detail = "exit codes, reruns, " + std::to_string(traced) + " trace round trips";
        return true;
    });

    if (failures != 0)
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
