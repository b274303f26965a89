#pragma once

#include <vector>

#include "bargain/errors.hpp"

namespace bargain {

// A utility pair: x is player 1's payoff, y is player 2's.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
double distance(Point a, Point b);

// Axis-aligned closed box [x_lo, x_hi] x [y_lo, y_hi].
struct Box {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;

    double diameter() const;
    Point center() const { return {0.5 * (x_lo + x_hi), 0.5 * (y_lo + y_hi)}; }
};

// A closed bounded convex bargaining set, stored as a counterclockwise vertex
// ring. Degenerate sets are first-class: one vertex is a point, two a segment.
// Construct through validate_convex; the clipping routines emit canonical
// polygons directly.
struct ConvexPolygon {
    std::vector<Point> vertices;

    bool is_point() const { return vertices.size() == 1; }
    bool is_segment() const { return vertices.size() == 2; }
};

// The two possible threat outcomes under the restriction rule:
// right = (x_max, y_right), top = (x_top, y_max).
struct CornerPair {
    Point right;
    Point top;
};

// Canonicalizes and validates a vertex ring: consecutive duplicates merged,
// orientation flipped to counterclockwise, fully collinear input reduced to
// its extreme segment (or point). Throws Error{empty_input, non_finite,
// not_convex}.
ConvexPolygon validate_convex(const std::vector<Point>& vertices);

// Smallest closed box containing P.
Box bounding_box(const ConvexPolygon& P);

// Max pairwise vertex distance; for a convex set this is the set diameter.
double diameter(const ConvexPolygon& P);

// right = argmax x, ties broken by larger y; top = argmax y, ties broken by
// larger x. The tie rule is the restriction on the chosen player: never waste
// the other player's utility.
CornerPair corner_points(const ConvexPolygon& P);

// P intersected with the quadrant {x >= p.x, y >= p.y}. The result may
// degenerate to a segment or point. Throws Error{empty_intersection} when p
// dominates all of P beyond tolerance.
ConvexPolygon clip_lower_left(const ConvexPolygon& P, Point p);

// Membership tests with an absolute slack of tol (used by tests and the
// problem validators; not on the solver hot path).
bool contains_point(const ConvexPolygon& P, Point q, double tol);
bool on_boundary(const ConvexPolygon& P, Point q, double tol);

namespace detail {
// Scale used to turn relative tolerances into absolute ones: never below 1.
double coordinate_scale(const std::vector<Point>& pts);
} // namespace detail

} // namespace bargain
