#include "bargain/frontier.hpp"

#include <algorithm>
#include <cmath>

namespace bargain {

namespace {

constexpr double kEdgeRelTol = 1e-12;    // domain/range clamp slack
constexpr double kConcaveRelTol = 1e-9;  // slope cross-product slack, times scale^2

void require_finite(std::initializer_list<double> values) {
    for (double v : values)
        if (!std::isfinite(v))
            throw Error(Errc::bad_parameter, "frontier parameters must be finite");
}

} // namespace

Frontier Frontier::linear(double x_lo, double x_hi, double y_lo, double y_hi) {
    require_finite({x_lo, x_hi, y_lo, y_hi});
    if (!(x_lo < x_hi)) throw Error(Errc::bad_domain, "domain is empty or reversed");
    if (!(y_hi > y_lo)) throw Error(Errc::not_decreasing, "y_hi must exceed y_lo");
    Frontier f;
    f.shape_ = Shape::linear;
    f.x_lo_ = x_lo;
    f.x_hi_ = x_hi;
    f.y_at_lo_ = y_hi;
    f.y_at_hi_ = y_lo;
    return f;
}

Frontier Frontier::circle(Point center, double radius, double x_lo, double x_hi) {
    require_finite({center.x, center.y, radius, x_lo, x_hi});
    if (!(radius > 0.0)) throw Error(Errc::bad_parameter, "radius must be positive");
    if (!(x_lo < x_hi)) throw Error(Errc::bad_domain, "domain is empty or reversed");
    const double slack = kEdgeRelTol * radius;
    if (x_lo < center.x - slack || x_hi > center.x + radius + slack)
        throw Error(Errc::bad_parameter,
                    "domain must lie within [center.x, center.x + radius]");
    Frontier f;
    f.shape_ = Shape::circle;
    f.center_ = center;
    f.radius_ = radius;
    f.x_lo_ = std::max(x_lo, center.x);
    f.x_hi_ = std::min(x_hi, center.x + radius);
    auto arc = [&](double t) {
        const double dx = t - center.x;
        return center.y + std::sqrt(std::max(0.0, radius * radius - dx * dx));
    };
    f.y_at_lo_ = arc(f.x_lo_);
    f.y_at_hi_ = arc(f.x_hi_);
    return f;
}

Frontier Frontier::power(double exponent, double x_lo, double x_hi, double y_lo,
                         double y_hi) {
    require_finite({exponent, x_lo, x_hi, y_lo, y_hi});
    if (!(exponent >= 1.0)) throw Error(Errc::bad_parameter, "exponent must be >= 1");
    if (!(x_lo < x_hi)) throw Error(Errc::bad_domain, "domain is empty or reversed");
    if (!(y_hi > y_lo)) throw Error(Errc::not_decreasing, "y_hi must exceed y_lo");
    Frontier f;
    f.shape_ = Shape::power;
    f.exponent_ = exponent;
    f.x_lo_ = x_lo;
    f.x_hi_ = x_hi;
    f.y_at_lo_ = y_hi;
    f.y_at_hi_ = y_lo;
    return f;
}

Frontier Frontier::polyline(std::vector<Point> points) {
    if (points.empty()) throw Error(Errc::bad_domain, "polyline is empty");
    for (const Point& p : points)
        require_finite({p.x, p.y});

    const double scale = detail::coordinate_scale(points);
    const double eps = kEdgeRelTol * scale;

    std::vector<Point> pts;
    for (const Point& p : points)
        if (pts.empty() || distance(pts.back(), p) > eps) pts.push_back(p);

    // Restriction-rule canonicalization: a flat prefix keeps only its
    // rightmost point, a vertical suffix only its topmost.
    while (pts.size() >= 2 && std::abs(pts[0].y - pts[1].y) <= eps)
        pts.erase(pts.begin());
    while (pts.size() >= 2 && std::abs(pts[pts.size() - 1].x - pts[pts.size() - 2].x) <= eps)
        pts.pop_back();

    if (pts.size() < 2) throw Error(Errc::bad_domain, "polyline domain is degenerate");

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i + 1].x > pts[i].x) || !(pts[i + 1].y < pts[i].y))
            throw Error(Errc::not_decreasing,
                        "polyline must be strictly decreasing in y and increasing in x");
    }
    const double cross_tol = kConcaveRelTol * scale * scale;
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        const Point a = pts[i], b = pts[i + 1], c = pts[i + 2];
        const double turn = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if (turn > cross_tol)
            throw Error(Errc::not_concave, "polyline bulges inward");
    }

    Frontier f;
    f.shape_ = Shape::polyline;
    f.x_lo_ = pts.front().x;
    f.x_hi_ = pts.back().x;
    f.y_at_lo_ = pts.front().y;
    f.y_at_hi_ = pts.back().y;
    f.points_ = std::move(pts);
    return f;
}

double Frontier::clamp_domain(double t) const {
    const double slack = kEdgeRelTol * width();
    if (t < x_lo_ - slack || t > x_hi_ + slack)
        throw Error(Errc::out_of_domain, "argument outside the frontier domain");
    return std::clamp(t, x_lo_, x_hi_);
}

double Frontier::clamp_range(double v) const {
    const double slack = kEdgeRelTol * height();
    if (v < y_at_hi_ - slack || v > y_at_lo_ + slack)
        throw Error(Errc::out_of_range, "value outside the frontier range");
    return std::clamp(v, y_at_hi_, y_at_lo_);
}

double Frontier::eval(double t) const {
    t = clamp_domain(t);
    if (t == x_lo_) return y_at_lo_;
    if (t == x_hi_) return y_at_hi_;
    switch (shape_) {
        case Shape::linear:
            return y_at_lo_ + (t - x_lo_) * (y_at_hi_ - y_at_lo_) / width();
        case Shape::circle: {
            const double dx = t - center_.x;
            return center_.y + std::sqrt(std::max(0.0, radius_ * radius_ - dx * dx));
        }
        case Shape::power: {
            const double s = (t - x_lo_) / width();
            return y_at_hi_ + (y_at_lo_ - y_at_hi_) * (1.0 - std::pow(s, exponent_));
        }
        case Shape::polyline: {
            auto it = std::upper_bound(points_.begin(), points_.end(), t,
                                       [](double v, const Point& p) { return v < p.x; });
            const std::size_t hi =
                std::clamp<std::size_t>(it - points_.begin(), 1, points_.size() - 1);
            const Point a = points_[hi - 1], b = points_[hi];
            return a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x);
        }
    }
    return y_at_lo_;
}

double Frontier::inverse(double v) const {
    v = clamp_range(v);
    if (v == y_at_lo_) return x_lo_;
    if (v == y_at_hi_) return x_hi_;
    switch (shape_) {
        case Shape::linear:
            return x_lo_ + (v - y_at_lo_) * width() / (y_at_hi_ - y_at_lo_);
        case Shape::circle: {
            const double dy = v - center_.y;
            return center_.x + std::sqrt(std::max(0.0, radius_ * radius_ - dy * dy));
        }
        case Shape::power: {
            const double s =
                std::pow((y_at_lo_ - v) / (y_at_lo_ - y_at_hi_), 1.0 / exponent_);
            return x_lo_ + s * width();
        }
        case Shape::polyline: {
            // points_ is strictly decreasing in y.
            auto it = std::upper_bound(points_.begin(), points_.end(), v,
                                       [](double val, const Point& p) { return val > p.y; });
            const std::size_t hi =
                std::clamp<std::size_t>(it - points_.begin(), 1, points_.size() - 1);
            const Point a = points_[hi - 1], b = points_[hi];
            return a.x + (v - a.y) * (b.x - a.x) / (b.y - a.y);
        }
    }
    return x_lo_;
}

double Frontier::inverse_by_bisection(double v) const {
    v = clamp_range(v);
    double lo = x_lo_, hi = x_hi_;
    const double target_width = 1e-13 * width();
    for (int i = 0; i < 200 && hi - lo > target_width; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid) > v)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Frontier pareto_frontier(const ConvexPolygon& P) {
    const CornerPair corners = corner_points(P);
    const double eps = 1e-12 * detail::coordinate_scale(P.vertices);
    if (distance(corners.right, corners.top) <= eps)
        throw Error(Errc::degenerate_frontier,
                    "top and right corners coincide; the set has a single Pareto point");

    const auto& verts = P.vertices;
    std::size_t i_right = 0, i_top = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] == corners.right) i_right = i;
        if (verts[i] == corners.top) i_top = i;
    }

    // CCW from the right corner to the top corner walks the upper-right
    // boundary with x decreasing; reverse to get the chain top -> right.
    std::vector<Point> chain;
    for (std::size_t i = i_right;; i = (i + 1) % verts.size()) {
        chain.push_back(verts[i]);
        if (i == i_top) break;
    }
    std::reverse(chain.begin(), chain.end());
    return Frontier::polyline(std::move(chain));
}

} // namespace bargain
