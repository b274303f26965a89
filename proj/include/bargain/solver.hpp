#pragma once

#include <vector>

#include "bargain/frontier.hpp"
#include "bargain/geometry.hpp"

namespace bargain {

struct SolverConfig {
    double tol = 1e-9;     // stop when the bounding-box diameter falls below this
    int max_iter = 200;
    bool record_trace = false;
};

// One row per examined set S_n: (x, y) is its top corner, (z, w) its right
// corner, t the threat point, diam the bounding-box diameter.
struct TraceRecord {
    int n = 0;
    double x = 0.0, y = 0.0;
    double z = 0.0, w = 0.0;
    Point t;
    double diam = 0.0;
};

struct Solution {
    Point point;
    int iterations = 0;    // trim applications / recurrence steps performed
    bool converged = false;
    std::vector<TraceRecord> trace;
};

// Trim(S) = S intersected with the quadrant above-right of t(S). Always
// nonempty for valid input since t(S) itself belongs to S.
ConvexPolygon trim(const ConvexPolygon& P);

// Iterates S_{n+1} = Trim(S_n) from S_0 = P until the bounding-box diameter
// reaches cfg.tol (or the set collapses to a single vertex); the returned
// point is the final box center. converged=false after max_iter, with the
// partial result and trace still filled in.
Solution solve_polygon(const ConvexPolygon& P, const SolverConfig& cfg = {});

// The corner recurrence on a frontier:
//   x' = (x+z)/2,  y' = f(x'),  w' = (y+w)/2,  z' = f^-1(w')
// started from the top corner (x_lo, f(x_lo)) and right corner
// (x_hi, f(x_hi)), stopping when max(z-x, y-w) <= cfg.tol. The two corner
// sequences bracket the solution throughout.
Solution solve_frontier(const Frontier& f, const SolverConfig& cfg = {});

// Frontier method applied to a polygon: extract the Pareto frontier and run
// the corner recurrence. A degenerate frontier (top corner == right corner)
// short-circuits to that corner, converged in 0 iterations.
Solution solve_polygon_by_frontier(const ConvexPolygon& P, const SolverConfig& cfg = {});

struct Prop1Report {
    bool pass = false;
    Point original;   // c(P)
    Point trimmed;    // c(Trim(P))
};

// Checks c(T) = c(Trim(T)) on P: both solves must land within 10 * cfg.tol
// per coordinate.
Prop1Report verify_prop1(const ConvexPolygon& P, const SolverConfig& cfg = {});

} // namespace bargain
