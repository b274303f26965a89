#include "bargain/problem.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <json.hpp>

namespace bargain {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double as_number(const json& j, const std::string& field) {
    if (!j.is_number())
        throw Error(Errc::schema_error, "field '" + field + "' must be a number");
    return j.get<double>();
}

Point as_point(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw Error(Errc::schema_error, "field '" + field + "' must be a [x, y] pair");
    return {as_number(j[0], field), as_number(j[1], field)};
}

std::vector<Point> as_point_list(const json& j, const std::string& field) {
    if (!j.is_array())
        throw Error(Errc::schema_error, "field '" + field + "' must be an array of [x, y] pairs");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (const auto& e : j) pts.push_back(as_point(e, field));
    return pts;
}

const json& require(const json& doc, const std::string& field) {
    auto it = doc.find(field);
    if (it == doc.end())
        throw Error(Errc::schema_error, "missing field '" + field + "'");
    return *it;
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.count(it.key()))
            throw Error(Errc::schema_error, "unknown field '" + it.key() + "'");
}

ordered_json point_to_json(Point p) { return ordered_json::array({p.x, p.y}); }

ordered_json points_to_json(const std::vector<Point>& pts) {
    ordered_json arr = ordered_json::array();
    for (const Point& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::syntax_error, e.what());
    }
    if (!doc.is_object())
        throw Error(Errc::schema_error, "problem must be a JSON object");

    ProblemFile p;
    const json& kind = require(doc, "kind");
    if (!kind.is_string())
        throw Error(Errc::schema_error, "field 'kind' must be a string");

    std::set<std::string> allowed{"kind", "tol", "max_iter"};
    if (kind == "polygon") {
        p.kind = ProblemFile::Kind::polygon;
        allowed.insert("vertices");
        p.vertices = as_point_list(require(doc, "vertices"), "vertices");
    } else if (kind == "frontier") {
        p.kind = ProblemFile::Kind::frontier;
        const json& shape = require(doc, "shape");
        if (!shape.is_string())
            throw Error(Errc::schema_error, "field 'shape' must be a string");
        allowed.insert("shape");
        auto read_domain = [&] {
            const json& d = require(doc, "domain");
            if (!d.is_array() || d.size() != 2)
                throw Error(Errc::schema_error, "field 'domain' must be [x_lo, x_hi]");
            p.x_lo = as_number(d[0], "domain");
            p.x_hi = as_number(d[1], "domain");
        };
        if (shape == "linear" || shape == "power") {
            p.shape = shape == "power" ? Frontier::Shape::power : Frontier::Shape::linear;
            allowed.insert({"domain", "y_lo", "y_hi"});
            read_domain();
            p.y_lo = as_number(require(doc, "y_lo"), "y_lo");
            p.y_hi = as_number(require(doc, "y_hi"), "y_hi");
            if (shape == "power") {
                allowed.insert("p");
                p.exponent = as_number(require(doc, "p"), "p");
            }
        } else if (shape == "circle") {
            p.shape = Frontier::Shape::circle;
            allowed.insert({"center", "radius", "domain"});
            p.center = as_point(require(doc, "center"), "center");
            p.radius = as_number(require(doc, "radius"), "radius");
            read_domain();
        } else if (shape == "polyline") {
            p.shape = Frontier::Shape::polyline;
            allowed.insert("points");
            p.points = as_point_list(require(doc, "points"), "points");
        } else {
            throw Error(Errc::schema_error, "unknown shape '" + shape.get<std::string>() + "'");
        }
    } else {
        throw Error(Errc::schema_error, "field 'kind' must be \"polygon\" or \"frontier\"");
    }

    reject_unknown(doc, allowed);

    if (auto it = doc.find("tol"); it != doc.end()) p.tol = as_number(*it, "tol");
    if (auto it = doc.find("max_iter"); it != doc.end()) {
        if (!it->is_number_integer())
            throw Error(Errc::schema_error, "field 'max_iter' must be an integer");
        p.max_iter = it->get<int>();
    }

    // Constructing the geometry now surfaces invariant violations at parse
    // time, with the module error attached.
    try {
        if (p.kind == ProblemFile::Kind::polygon)
            to_polygon(p);
        else
            to_frontier(p);
    } catch (const Error& e) {
        throw Error(Errc::validation_error, e.what());
    }
    return p;
}

std::string serialize_problem(const ProblemFile& p) {
    ordered_json doc;
    if (p.kind == ProblemFile::Kind::polygon) {
        doc["kind"] = "polygon";
        doc["vertices"] = points_to_json(p.vertices);
    } else {
        doc["kind"] = "frontier";
        switch (p.shape) {
            case Frontier::Shape::linear:
                doc["shape"] = "linear";
                doc["domain"] = ordered_json::array({p.x_lo, p.x_hi});
                doc["y_lo"] = p.y_lo;
                doc["y_hi"] = p.y_hi;
                break;
            case Frontier::Shape::power:
                doc["shape"] = "power";
                doc["p"] = p.exponent;
                doc["domain"] = ordered_json::array({p.x_lo, p.x_hi});
                doc["y_lo"] = p.y_lo;
                doc["y_hi"] = p.y_hi;
                break;
            case Frontier::Shape::circle:
                doc["shape"] = "circle";
                doc["center"] = point_to_json(p.center);
                doc["radius"] = p.radius;
                doc["domain"] = ordered_json::array({p.x_lo, p.x_hi});
                break;
            case Frontier::Shape::polyline:
                doc["shape"] = "polyline";
                doc["points"] = points_to_json(p.points);
                break;
        }
    }
    if (p.tol) doc["tol"] = *p.tol;
    if (p.max_iter) doc["max_iter"] = *p.max_iter;
    return doc.dump();
}

ConvexPolygon to_polygon(const ProblemFile& p) {
    return validate_convex(p.vertices);
}

Frontier to_frontier(const ProblemFile& p) {
    switch (p.shape) {
        case Frontier::Shape::linear:
            return Frontier::linear(p.x_lo, p.x_hi, p.y_lo, p.y_hi);
        case Frontier::Shape::circle:
            return Frontier::circle(p.center, p.radius, p.x_lo, p.x_hi);
        case Frontier::Shape::power:
            return Frontier::power(p.exponent, p.x_lo, p.x_hi, p.y_lo, p.y_hi);
        case Frontier::Shape::polyline:
            return Frontier::polyline(p.points);
    }
    throw Error(Errc::schema_error, "unreachable shape");
}

ConvexPolygon inscribe_polygon(const Frontier& f, int segments) {
    if (segments < 1) throw Error(Errc::bad_parameter, "segments must be at least 1");

    std::vector<Point> ring;
    ring.push_back({f.x_lo(), f.y_at_hi()});
    ring.push_back({f.x_hi(), f.y_at_hi()});  // right corner, on the frontier
    if (f.shape() == Frontier::Shape::polyline) {
        const auto& pts = f.polyline_points();
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) ring.push_back(*it);
    } else {
        for (int k = segments - 1; k >= 1; --k) {
            const double x =
                f.x_lo() + static_cast<double>(k) * f.width() / static_cast<double>(segments);
            ring.push_back({x, f.eval(x)});
        }
        ring.push_back({f.x_lo(), f.y_at_lo()});  // top corner
    }
    return validate_convex(ring);
}

} // namespace bargain
