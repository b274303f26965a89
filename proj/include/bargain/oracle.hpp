#pragma once

#include <cstddef>
#include <vector>

#include "bargain/frontier.hpp"
#include "bargain/geometry.hpp"

namespace bargain {

// A dense finite sample of a bargaining set, used to cross-validate the
// solvers by brute force. Deliberately does not reuse the clipping code it
// is meant to check: containment and corner scans are reimplemented here.
struct PointCloud {
    std::vector<Point> points;
    double resolution = 0.0;
};

// All lattice points (i*res, j*res) inside P, plus P's own vertices so
// extreme points survive grid misalignment. Throws Error{bad_parameter} for
// a nonpositive resolution.
PointCloud discretize(const ConvexPolygon& P, double resolution);

// Lattice sample of the region under f (floored at f(x_hi)), plus boundary
// samples at x-spacing `resolution` so the frontier itself is represented.
PointCloud discretize(const Frontier& f, double resolution);

// Repeated corner/threat/filter passes over the cloud: keep the points that
// weakly dominate the threat midpoint, stop when a pass removes nothing or
// would empty the set, and return the mean of the survivors. When `passes`
// is given, the surviving subset after each filtering pass is appended to it.
Point solve_cloud(const PointCloud& cloud,
                  std::vector<std::vector<Point>>* passes = nullptr);

} // namespace bargain
