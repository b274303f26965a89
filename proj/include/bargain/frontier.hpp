#pragma once

#include <vector>

#include "bargain/geometry.hpp"

namespace bargain {

// The boundary arc between the top corner (x_lo, y at x_lo) and the right
// corner (x_hi, y at x_hi): a strictly decreasing concave function of x.
class Frontier {
public:
    enum class Shape { linear, circle, power, polyline };

    // Straight segment from (x_lo, y_hi) down to (x_hi, y_lo).
    static Frontier linear(double x_lo, double x_hi, double y_lo, double y_hi);
    // Upper-right arc of the circle centered at `center` with radius
    // `radius`; the domain must sit inside [center.x, center.x + radius].
    static Frontier circle(Point center, double radius, double x_lo, double x_hi);
    // f(t) = y_lo + (y_hi - y_lo) * (1 - s^p) with s the domain fraction;
    // exponent p >= 1 keeps it concave.
    static Frontier power(double exponent, double x_lo, double x_hi, double y_lo, double y_hi);
    // Piecewise-linear chain; canonicalized so x is strictly increasing and
    // y strictly decreasing (flat prefix and vertical suffix removed).
    static Frontier polyline(std::vector<Point> points);

    Shape shape() const { return shape_; }
    double x_lo() const { return x_lo_; }
    double x_hi() const { return x_hi_; }
    double y_at_lo() const { return y_at_lo_; }  // = max ordinate of the set
    double y_at_hi() const { return y_at_hi_; }  // = ordinate of the right corner
    double width() const { return x_hi_ - x_lo_; }
    double height() const { return y_at_lo_ - y_at_hi_; }

    // f(t). t may overshoot the domain by 1e-12 * width and is clamped;
    // beyond that throws Error{out_of_domain}.
    double eval(double t) const;

    // The unique t with f(t) = v, closed form per shape (segment lookup for
    // polylines). Clamping mirrors eval; beyond throws Error{out_of_range}.
    double inverse(double v) const;

    // Bisection fallback for the same inverse, kept as an independent route
    // for cross-checks: contracts the bracket to 1e-13 * width in at most
    // 200 halvings.
    double inverse_by_bisection(double v) const;

    // Parameter accessors for serialization.
    Point circle_center() const { return center_; }
    double circle_radius() const { return radius_; }
    double power_exponent() const { return exponent_; }
    const std::vector<Point>& polyline_points() const { return points_; }

private:
    Frontier() = default;

    Shape shape_ = Shape::linear;
    double x_lo_ = 0.0, x_hi_ = 1.0;
    double y_at_lo_ = 1.0, y_at_hi_ = 0.0;
    Point center_;                 // circle
    double radius_ = 0.0;          // circle
    double exponent_ = 1.0;        // power
    std::vector<Point> points_;    // polyline

    double clamp_domain(double t) const;
    double clamp_range(double v) const;
};

// Extracts the Pareto frontier of P: the boundary chain from the top corner
// to the right corner, as a polyline Frontier. Throws
// Error{degenerate_frontier} when both corners coincide (the caller should
// report that corner as the solution directly).
Frontier pareto_frontier(const ConvexPolygon& P);

} // namespace bargain
