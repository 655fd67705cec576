#include "matchstick/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace matchstick::geom {

namespace {

constexpr double kIntersectionSlack = 1e-12;

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

// Signed distance of p from the line through a, b (positive on the left).
double side_distance(Coord a, Coord b, Coord p) {
    return cross(b - a, p - a) / distance(a, b);
}

bool on_segment(Coord p, Coord a, Coord b, double tol) {
    return point_segment_distance(p, a, b) <= tol;
}

}  // namespace

char turn_symbol(Turn t) { return t == Turn::Ccw ? '+' : '-'; }

const char* to_string(SegmentRelation r) {
    switch (r) {
        case SegmentRelation::Disjoint: return "Disjoint";
        case SegmentRelation::ProperCrossing: return "ProperCrossing";
        case SegmentRelation::SharedEndpoint: return "SharedEndpoint";
        case SegmentRelation::EndpointOnInterior: return "EndpointOnInterior";
        case SegmentRelation::CollinearOverlap: return "CollinearOverlap";
    }
    return "?";
}

double distance(Coord p, Coord q) { return std::hypot(p.x - q.x, p.y - q.y); }
double cross(Coord a, Coord b) { return a.x * b.y - a.y * b.x; }
double dot(Coord a, Coord b) { return a.x * b.x + a.y * b.y; }
Coord midpoint(Coord a, Coord b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

std::vector<Coord> circle_circle_intersection(Coord c1, double r1, Coord c2, double r2) {
    const double d = distance(c1, c2);
    if (d == 0.0) {
        throw GeometryError(GeometryError::Kind::ConcentricDegenerate,
                            "circle intersection: concentric circles");
    }
    if (d > r1 + r2 + kIntersectionSlack || d < std::abs(r1 - r2) - kIntersectionSlack) {
        throw GeometryError(GeometryError::Kind::NoIntersection,
                            "circle intersection: circles do not meet");
    }
    const Coord u = (1.0 / d) * (c2 - c1);
    const Coord n{-u.y, u.x};
    // Distance from c1 to the radical line, along u.
    const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double h2 = r1 * r1 - a * a;
    const Coord foot = c1 + a * u;
    if (h2 <= 0.0 || std::sqrt(h2) <= kIntersectionSlack) {
        return {foot};
    }
    const double h = std::sqrt(h2);
    return {foot + h * n, foot - h * n};
}

Coord place_by_angle(Coord base, Coord ref, double angle_deg, Turn turn) {
    const double d = distance(base, ref);
    if (d == 0.0) {
        throw GeometryError(GeometryError::Kind::DegenerateReference,
                            "place_by_angle: base and reference coincide");
    }
    const Coord u = (1.0 / d) * (ref - base);
    const double t = radians(angle_deg) * sign_of(turn);
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {base.x + c * u.x - s * u.y, base.y + s * u.x + c * u.y};
}

Coord point_reflect(Coord p, Coord center) { return 2.0 * center - p; }

double angle_deg(Coord a, Coord vertex, Coord b) {
    const Coord u = a - vertex;
    const Coord v = b - vertex;
    return std::atan2(std::abs(cross(u, v)), dot(u, v)) * 180.0 / std::numbers::pi;
}

SegmentRelation segment_relation(Coord a1, Coord a2, Coord b1, Coord b2, double tol) {
    const bool s11 = distance(a1, b1) <= tol;
    const bool s12 = distance(a1, b2) <= tol;
    const bool s21 = distance(a2, b1) <= tol;
    const bool s22 = distance(a2, b2) <= tol;
    const int shared = int(s11) + int(s12) + int(s21) + int(s22);
    if (shared >= 2) {
        return SegmentRelation::CollinearOverlap;
    }

    const double o1 = side_distance(a1, a2, b1);
    const double o2 = side_distance(a1, a2, b2);
    const double o3 = side_distance(b1, b2, a1);
    const double o4 = side_distance(b1, b2, a2);
    const bool collinear = std::abs(o1) <= tol && std::abs(o2) <= tol;

    if (collinear) {
        // Project onto a's direction and measure the overlap length.
        const Coord u = (1.0 / distance(a1, a2)) * (a2 - a1);
        const double alo = 0.0;
        const double ahi = distance(a1, a2);
        const double t1 = dot(b1 - a1, u);
        const double t2 = dot(b2 - a1, u);
        const double overlap = std::min(ahi, std::max(t1, t2)) - std::max(alo, std::min(t1, t2));
        if (overlap > tol) {
            return SegmentRelation::CollinearOverlap;
        }
        if (shared == 1) {
            return SegmentRelation::SharedEndpoint;
        }
        return overlap >= -tol ? SegmentRelation::EndpointOnInterior : SegmentRelation::Disjoint;
    }

    if (shared == 1) {
        // The unshared endpoint of one segment may still rest on the other.
        const Coord a_free = (s11 || s12) ? a2 : a1;
        const Coord b_free = (s11 || s21) ? b2 : b1;
        if (on_segment(a_free, b1, b2, tol) || on_segment(b_free, a1, a2, tol)) {
            return SegmentRelation::EndpointOnInterior;
        }
        return SegmentRelation::SharedEndpoint;
    }

    if (on_segment(b1, a1, a2, tol) || on_segment(b2, a1, a2, tol) ||
        on_segment(a1, b1, b2, tol) || on_segment(a2, b1, b2, tol)) {
        return SegmentRelation::EndpointOnInterior;
    }
    if (o1 * o2 < 0.0 && o3 * o4 < 0.0) {
        return SegmentRelation::ProperCrossing;
    }
    return SegmentRelation::Disjoint;
}

double point_segment_distance(Coord p, Coord a, Coord b) {
    const Coord ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * ab);
}

}  // namespace matchstick::geom
