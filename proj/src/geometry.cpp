#include "bargain/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bargain {

namespace {

constexpr double kRelTol = 1e-12;        // canonicalization / containment slack
constexpr double kConvexRelTol = 1e-9;   // cross-product convexity slack, times diam^2

double cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double point_segment_distance(Point q, Point a, Point b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return distance(q, a);
    double t = ((q.x - a.x) * dx + (q.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(q, {a.x + t * dx, a.y + t * dy});
}

// Larger-x-then-y and larger-y-then-x orderings used for corner extraction.
bool less_xy(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
bool less_yx(Point a, Point b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

std::vector<Point> dedupe_ring(const std::vector<Point>& in, double eps) {
    std::vector<Point> out;
    out.reserve(in.size());
    for (const Point& p : in) {
        if (out.empty() || distance(out.back(), p) > eps) out.push_back(p);
    }
    while (out.size() > 1 && distance(out.front(), out.back()) <= eps) out.pop_back();
    return out;
}

// One Sutherland-Hodgman pass against the half-plane inside(v) >= 0. The
// crossing constructor must place new vertices exactly on the clip line so
// the trimmed bounding box starts at the threat point with no slack.
template <typename Inside, typename Crossing>
std::vector<Point> clip_half_plane(const std::vector<Point>& ring, Inside inside,
                                   Crossing crossing, double eps) {
    if (ring.size() == 1) {
        if (inside(ring[0]) >= -eps) return ring;
        return {};
    }
    if (ring.size() == 2) {
        const double da = inside(ring[0]), db = inside(ring[1]);
        std::vector<Point> out;
        if (da >= -eps) out.push_back(ring[0]);
        if ((da >= -eps) != (db >= -eps)) out.push_back(crossing(ring[0], ring[1]));
        if (db >= -eps) out.push_back(ring[1]);
        return out;
    }
    std::vector<Point> out;
    out.reserve(ring.size() + 2);
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % ring.size()];
        const bool a_in = inside(a) >= -eps;
        const bool b_in = inside(b) >= -eps;
        if (a_in) out.push_back(a);
        if (a_in != b_in) out.push_back(crossing(a, b));
    }
    return out;
}

} // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Box::diameter() const { return std::hypot(x_hi - x_lo, y_hi - y_lo); }

namespace detail {

double coordinate_scale(const std::vector<Point>& pts) {
    double s = 1.0;
    for (const Point& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

} // namespace detail

ConvexPolygon validate_convex(const std::vector<Point>& vertices) {
    if (vertices.empty()) throw Error(Errc::empty_input, "vertex list is empty");
    for (const Point& p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(Errc::non_finite, "vertex coordinates must be finite");
    }

    const double eps = kRelTol * detail::coordinate_scale(vertices);
    std::vector<Point> ring = dedupe_ring(vertices, eps);
    if (ring.size() <= 2) return ConvexPolygon{std::move(ring)};

    double area2 = 0.0;  // twice the signed area
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i], b = ring[(i + 1) % ring.size()];
        area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 < 0.0) std::reverse(ring.begin(), ring.end());

    double diam = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i)
        for (std::size_t j = i + 1; j < ring.size(); ++j)
            diam = std::max(diam, distance(ring[i], ring[j]));

    const double cross_tol = kConvexRelTol * diam * diam;
    bool all_collinear = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point o = ring[i];
        const Point a = ring[(i + 1) % ring.size()];
        const Point b = ring[(i + 2) % ring.size()];
        const double c = cross(o, a, b);
        if (c < -cross_tol)
            throw Error(Errc::not_convex, "reflex vertex beyond tolerance");
        if (std::abs(c) > cross_tol) all_collinear = false;
    }

    if (all_collinear) {
        // Zero-area input: reduce to the extreme segment.
        auto [lo, hi] = std::minmax_element(ring.begin(), ring.end(), less_xy);
        if (distance(*lo, *hi) <= eps) return ConvexPolygon{{*lo}};
        return ConvexPolygon{{*lo, *hi}};
    }
    return ConvexPolygon{std::move(ring)};
}

Box bounding_box(const ConvexPolygon& P) {
    Box b{P.vertices[0].x, P.vertices[0].x, P.vertices[0].y, P.vertices[0].y};
    for (const Point& p : P.vertices) {
        b.x_lo = std::min(b.x_lo, p.x);
        b.x_hi = std::max(b.x_hi, p.x);
        b.y_lo = std::min(b.y_lo, p.y);
        b.y_hi = std::max(b.y_hi, p.y);
    }
    return b;
}

double diameter(const ConvexPolygon& P) {
    double d = 0.0;
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < P.vertices.size(); ++j)
            d = std::max(d, distance(P.vertices[i], P.vertices[j]));
    return d;
}

CornerPair corner_points(const ConvexPolygon& P) {
    CornerPair c{P.vertices[0], P.vertices[0]};
    for (const Point& p : P.vertices) {
        if (less_xy(c.right, p)) c.right = p;
        if (less_yx(c.top, p)) c.top = p;
    }
    return c;
}

ConvexPolygon clip_lower_left(const ConvexPolygon& P, Point p) {
    std::vector<Point> all = P.vertices;
    all.push_back(p);
    const double eps = kRelTol * detail::coordinate_scale(all);

    std::vector<Point> ring = clip_half_plane(
        P.vertices, [&](Point v) { return v.x - p.x; },
        [&](Point a, Point b) {
            const double t = std::clamp((p.x - a.x) / (b.x - a.x), 0.0, 1.0);
            return Point{p.x, a.y + t * (b.y - a.y)};
        },
        eps);
    ring = clip_half_plane(
        ring, [&](Point v) { return v.y - p.y; },
        [&](Point a, Point b) {
            const double t = std::clamp((p.y - a.y) / (b.y - a.y), 0.0, 1.0);
            return Point{a.x + t * (b.x - a.x), p.y};
        },
        eps);

    ring = dedupe_ring(ring, eps);
    if (ring.empty())
        throw Error(Errc::empty_intersection, "clip point dominates the whole set");
    if (ring.size() > 2) {
        // The clip may leave a zero-area sliver listed as >2 near-collinear
        // points; collapse it the same way validate_convex does.
        double diam = 0.0;
        std::size_t ilo = 0, ihi = 0;
        for (std::size_t i = 0; i < ring.size(); ++i)
            for (std::size_t j = i + 1; j < ring.size(); ++j)
                if (double d = distance(ring[i], ring[j]); d > diam) {
                    diam = d;
                    ilo = i;
                    ihi = j;
                }
        bool flat = true;
        for (const Point& q : ring)
            if (point_segment_distance(q, ring[ilo], ring[ihi]) > eps) {
                flat = false;
                break;
            }
        if (flat) {
            Point a = ring[ilo], b = ring[ihi];
            if (less_xy(b, a)) std::swap(a, b);
            ring = diam <= eps ? std::vector<Point>{a} : std::vector<Point>{a, b};
        }
    }
    return ConvexPolygon{std::move(ring)};
}

bool contains_point(const ConvexPolygon& P, Point q, double tol) {
    if (P.vertices.size() == 1) return distance(P.vertices[0], q) <= tol;
    if (P.vertices.size() == 2)
        return point_segment_distance(q, P.vertices[0], P.vertices[1]) <= tol;
    for (std::size_t i = 0; i < P.vertices.size(); ++i) {
        const Point a = P.vertices[i], b = P.vertices[(i + 1) % P.vertices.size()];
        const double len = distance(a, b);
        if (len == 0.0) continue;
        if (cross(a, b, q) / len < -tol) return false;  // signed distance to edge
    }
    return true;
}

bool on_boundary(const ConvexPolygon& P, Point q, double tol) {
    if (P.vertices.size() == 1) return distance(P.vertices[0], q) <= tol;
    for (std::size_t i = 0; i < P.vertices.size(); ++i) {
        const Point a = P.vertices[i], b = P.vertices[(i + 1) % P.vertices.size()];
        if (point_segment_distance(q, a, b) <= tol) return true;
    }
    return false;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::empty_input: return "EmptyInput";
        case Errc::non_finite: return "NonFinite";
        case Errc::not_convex: return "NotConvex";
        case Errc::empty_intersection: return "EmptyIntersection";
        case Errc::degenerate_frontier: return "DegenerateFrontier";
        case Errc::not_decreasing: return "NotDecreasing";
        case Errc::not_concave: return "NotConcave";
        case Errc::bad_domain: return "BadDomain";
        case Errc::bad_parameter: return "BadParameter";
        case Errc::out_of_domain: return "OutOfDomain";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::zero_samples: return "ZeroSamples";
        case Errc::empty_cloud: return "EmptyCloud";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::schema_error: return "SchemaError";
        case Errc::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

} // namespace bargain
