#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bargain/frontier.hpp"
#include "bargain/geometry.hpp"

namespace bargain {

// Parsed form of a problem file. See README for the JSON schema; field names
// here match the file format one-to-one.
struct ProblemFile {
    enum class Kind { polygon, frontier };

    Kind kind = Kind::polygon;

    // kind == polygon
    std::vector<Point> vertices;

    // kind == frontier
    Frontier::Shape shape = Frontier::Shape::linear;
    double x_lo = 0.0, x_hi = 1.0;        // "domain": [x_lo, x_hi]
    double y_lo = 0.0, y_hi = 1.0;        // range of f: y_lo = f(x_hi), y_hi = f(x_lo)
    Point center;                          // circle
    double radius = 0.0;                   // circle
    double exponent = 1.0;                 // power ("p")
    std::vector<Point> points;             // polyline

    // optional solver overrides
    std::optional<double> tol;
    std::optional<int> max_iter;
};

// Parses and validates a UTF-8 JSON problem. Unknown fields are rejected.
// Throws Error{syntax_error} on malformed JSON, Error{schema_error} on
// missing/unknown/mistyped fields, Error{validation_error} when the geometry
// or frontier constructor rejects the data.
ProblemFile parse_problem(const std::string& text);

// Canonical single-line JSON for a problem; parse_problem(serialize_problem(p))
// reproduces p exactly.
std::string serialize_problem(const ProblemFile& problem);

ConvexPolygon to_polygon(const ProblemFile& problem);   // requires kind == polygon
Frontier to_frontier(const ProblemFile& problem);       // requires kind == frontier

// Region under f down to the floor y = f(x_hi), inscribed as a polygon with
// `segments` chords along the frontier. Used when the polygon method is asked
// to run on a frontier problem.
ConvexPolygon inscribe_polygon(const Frontier& f, int segments);

} // namespace bargain
