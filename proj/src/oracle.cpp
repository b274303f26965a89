#include "bargain/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace bargain {

namespace {

constexpr double kEps = 1e-12;

long ceil_index(double v, double res, double eps) {
    return static_cast<long>(std::ceil((v - eps) / res));
}

long floor_index(double v, double res, double eps) {
    return static_cast<long>(std::floor((v + eps) / res));
}

bool lattice_aligned(double v, double res) {
    const double i = std::round(v / res);
    return std::abs(v - i * res) <= 1e-9 * std::max(1.0, std::abs(v));
}

// x-extent of the intersection of P's boundary with the vertical line at x,
// via a direct edge scan (no reuse of the clipping code under test).
bool column_span(const std::vector<Point>& verts, double x, double eps, double& y_lo,
                 double& y_hi) {
    bool found = false;
    auto take = [&](double y) {
        y_lo = found ? std::min(y_lo, y) : y;
        y_hi = found ? std::max(y_hi, y) : y;
        found = true;
    };
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = verts[i];
        const Point b = verts[(i + 1) % std::max<std::size_t>(n, 1)];
        if (std::abs(a.x - b.x) <= eps) {
            if (std::abs(a.x - x) <= eps) {
                take(a.y);
                take(b.y);
            }
            continue;
        }
        if (x < std::min(a.x, b.x) - eps || x > std::max(a.x, b.x) + eps) continue;
        const double t = std::clamp((x - a.x) / (b.x - a.x), 0.0, 1.0);
        take(a.y + t * (b.y - a.y));
    }
    return found;
}

} // namespace

PointCloud discretize(const ConvexPolygon& P, double resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw Error(Errc::bad_parameter, "resolution must be positive and finite");

    const double eps = kEps * detail::coordinate_scale(P.vertices);
    double x_min = P.vertices[0].x, x_max = P.vertices[0].x;
    for (const Point& v : P.vertices) {
        x_min = std::min(x_min, v.x);
        x_max = std::max(x_max, v.x);
    }

    PointCloud cloud;
    cloud.resolution = resolution;
    for (long i = ceil_index(x_min, resolution, eps); i <= floor_index(x_max, resolution, eps);
         ++i) {
        const double x = static_cast<double>(i) * resolution;
        double y_lo = 0.0, y_hi = 0.0;
        if (!column_span(P.vertices, x, eps, y_lo, y_hi)) continue;
        for (long j = ceil_index(y_lo, resolution, eps);
             j <= floor_index(y_hi, resolution, eps); ++j)
            cloud.points.push_back({x, static_cast<double>(j) * resolution});
    }
    // Off-lattice extreme points would otherwise be missed entirely.
    for (const Point& v : P.vertices)
        if (!lattice_aligned(v.x, resolution) || !lattice_aligned(v.y, resolution))
            cloud.points.push_back(v);

    if (cloud.points.empty()) throw Error(Errc::empty_cloud, "resolution too coarse");
    return cloud;
}

PointCloud discretize(const Frontier& f, double resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw Error(Errc::bad_parameter, "resolution must be positive and finite");

    const double floor_y = f.y_at_hi();
    const double eps =
        kEps * std::max({1.0, std::abs(f.x_lo()), std::abs(f.x_hi()),
                         std::abs(f.y_at_lo()), std::abs(floor_y)});

    PointCloud cloud;
    cloud.resolution = resolution;
    for (long i = ceil_index(f.x_lo(), resolution, eps);
         i <= floor_index(f.x_hi(), resolution, eps); ++i) {
        const double x = static_cast<double>(i) * resolution;
        const double top = f.eval(std::clamp(x, f.x_lo(), f.x_hi()));
        for (long j = ceil_index(floor_y, resolution, eps);
             j <= floor_index(top, resolution, eps); ++j)
            cloud.points.push_back({x, static_cast<double>(j) * resolution});
    }
    // Boundary samples keep the frontier (and in particular both corners)
    // represented regardless of grid alignment.
    const long steps = std::max<long>(1, std::lround(std::ceil(f.width() / resolution)));
    for (long k = 0; k <= steps; ++k) {
        const double x = (k == steps)
                             ? f.x_hi()
                             : f.x_lo() + static_cast<double>(k) * f.width() /
                                              static_cast<double>(steps);
        cloud.points.push_back({x, f.eval(x)});
    }
    if (f.shape() == Frontier::Shape::polyline)
        for (const Point& p : f.polyline_points()) cloud.points.push_back(p);

    if (cloud.points.empty()) throw Error(Errc::empty_cloud, "resolution too coarse");
    return cloud;
}

Point solve_cloud(const PointCloud& cloud, std::vector<std::vector<Point>>* passes) {
    if (cloud.points.empty()) throw Error(Errc::empty_cloud, "cloud has no points");

    std::vector<Point> pts = cloud.points;
    const double eps = kEps * detail::coordinate_scale(pts);

    for (;;) {
        Point right = pts[0], top = pts[0];
        for (const Point& p : pts) {
            if (p.x > right.x || (p.x == right.x && p.y > right.y)) right = p;
            if (p.y > top.y || (p.y == top.y && p.x > top.x)) top = p;
        }
        const Point t = midpoint(right, top);

        std::vector<Point> survivors;
        survivors.reserve(pts.size());
        for (const Point& p : pts)
            if (p.x >= t.x - eps && p.y >= t.y - eps) survivors.push_back(p);

        if (survivors.empty()) break;                  // would empty the set
        const bool unchanged = survivors.size() == pts.size();
        pts.swap(survivors);
        if (passes) passes->push_back(pts);
        if (unchanged) break;                          // filter removed nothing
    }

    double sx = 0.0, sy = 0.0;
    for (const Point& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(pts.size());
    return {sx / n, sy / n};
}

} // namespace bargain
