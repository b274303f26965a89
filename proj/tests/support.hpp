// Shared helpers for the test binaries: deterministic random polygons and an
// independently coded convex hull (Andrew's monotone chain), so property
// tests do not lean on the library's own geometry beyond the types.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bargain/geometry.hpp"

namespace testsupport {

using bargain::Point;

inline double cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// CCW hull with strictly convex corners (collinear points dropped).
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

// Hull of `count` uniform points in [lo, hi]^2; retries until nondegenerate.
inline std::vector<Point> random_hull(std::mt19937_64& rng, int count, double lo,
                                      double hi) {
    std::uniform_real_distribution<double> coord(lo, hi);
    for (;;) {
        std::vector<Point> pts;
        pts.reserve(count);
        for (int i = 0; i < count; ++i) pts.push_back({coord(rng), coord(rng)});
        std::vector<Point> hull = convex_hull(std::move(pts));
        if (hull.size() >= 3) return hull;
    }
}

} // namespace testsupport
