#include "bargain/solver.hpp"

#include <algorithm>
#include <cmath>

#include "bargain/threat.hpp"

namespace bargain {

namespace {

void check_config(const SolverConfig& cfg) {
    if (!(cfg.tol > 0.0))
        throw Error(Errc::bad_parameter, "tolerance must be positive");
    if (cfg.max_iter < 1)
        throw Error(Errc::bad_parameter, "max_iter must be at least 1");
}

} // namespace

ConvexPolygon trim(const ConvexPolygon& P) {
    return clip_lower_left(P, threat_point(corner_points(P)));
}

Solution solve_polygon(const ConvexPolygon& P, const SolverConfig& cfg) {
    check_config(cfg);
    Solution sol;
    ConvexPolygon S = P;
    int n = 0;
    for (;;) {
        const CornerPair corners = corner_points(S);
        const Point t = threat_point(corners);
        const Box box = bounding_box(S);
        const double diam = box.diameter();
        if (cfg.record_trace)
            sol.trace.push_back({n, corners.top.x, corners.top.y, corners.right.x,
                                 corners.right.y, t, diam});
        if (diam <= cfg.tol || S.is_point()) {
            sol.point = S.is_point() ? S.vertices[0] : box.center();
            sol.converged = true;
            break;
        }
        if (n >= cfg.max_iter) {
            sol.point = box.center();
            sol.converged = false;
            break;
        }
        S = clip_lower_left(S, t);
        ++n;
    }
    sol.iterations = n;
    return sol;
}

Solution solve_frontier(const Frontier& f, const SolverConfig& cfg) {
    check_config(cfg);
    Solution sol;
    double x = f.x_lo(), y = f.y_at_lo();   // top corner (x_n, y_n)
    double z = f.x_hi(), w = f.y_at_hi();   // right corner (z_n, w_n)
    int n = 0;
    for (;;) {
        if (cfg.record_trace)
            sol.trace.push_back(
                {n, x, y, z, w, {0.5 * (x + z), 0.5 * (y + w)}, std::hypot(z - x, y - w)});
        if (std::max(z - x, y - w) <= cfg.tol) {
            sol.converged = true;
            break;
        }
        if (n >= cfg.max_iter) {
            sol.converged = false;
            break;
        }
        const double xn = 0.5 * (x + z);
        const double wn = 0.5 * (y + w);
        // Evaluation rounding must not break the proven brackets
        // x_n <= z_n, w_n <= y_n or their monotonicity.
        const double yn = std::clamp(f.eval(xn), wn, y);
        const double zn = std::clamp(f.inverse(wn), xn, z);
        x = xn;
        y = yn;
        z = zn;
        w = wn;
        ++n;
    }
    sol.point = {0.5 * (x + z), 0.5 * (y + w)};
    sol.iterations = n;
    return sol;
}

Solution solve_polygon_by_frontier(const ConvexPolygon& P, const SolverConfig& cfg) {
    const CornerPair corners = corner_points(P);
    const double eps = 1e-12 * detail::coordinate_scale(P.vertices);
    if (distance(corners.right, corners.top) <= eps) {
        // Single Pareto point: the restriction rule pins both players there.
        Solution sol;
        sol.point = corners.right;
        sol.converged = true;
        sol.iterations = 0;
        if (cfg.record_trace)
            sol.trace.push_back({0, corners.top.x, corners.top.y, corners.right.x,
                                 corners.right.y, corners.right, 0.0});
        return sol;
    }
    return solve_frontier(pareto_frontier(P), cfg);
}

Prop1Report verify_prop1(const ConvexPolygon& P, const SolverConfig& cfg) {
    Prop1Report report;
    report.original = solve_polygon(P, cfg).point;
    report.trimmed = solve_polygon(trim(P), cfg).point;
    report.pass = std::abs(report.original.x - report.trimmed.x) <= 10.0 * cfg.tol &&
                  std::abs(report.original.y - report.trimmed.y) <= 10.0 * cfg.tol;
    return report;
}

} // namespace bargain
