#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace matchstick::geom {

/// Default tolerance for geometric coincidence, in unit lengths.
inline constexpr double kCoincidenceTol = 1e-9;

struct Coord {
    double x = 0.0;
    double y = 0.0;

    friend Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
    friend Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
    friend Coord operator*(double s, Coord a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Coord&, const Coord&) = default;
};

/// Counterclockwise (+1) or clockwise (-1). Selects the side of a directed
/// line on which a constructed point lands.
enum class Turn : int { Ccw = 1, Cw = -1 };

inline int sign_of(Turn t) { return static_cast<int>(t); }
inline Turn flipped(Turn t) { return t == Turn::Ccw ? Turn::Cw : Turn::Ccw; }
char turn_symbol(Turn t);

enum class SegmentRelation {
    Disjoint,
    ProperCrossing,
    SharedEndpoint,
    EndpointOnInterior,
    CollinearOverlap,
};

const char* to_string(SegmentRelation r);

class GeometryError : public std::runtime_error {
public:
    enum class Kind { NoIntersection, ConcentricDegenerate, DegenerateReference };

    GeometryError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

double distance(Coord p, Coord q);
double cross(Coord a, Coord b);
double dot(Coord a, Coord b);
Coord midpoint(Coord a, Coord b);

/// Intersections of circle (c1, r1) with circle (c2, r2). When two points
/// exist the first lies to the left of the directed line c1 -> c2.
/// Throws GeometryError on disjoint/nested circles (beyond 1e-12) or equal centers.
std::vector<Coord> circle_circle_intersection(Coord c1, double r1, Coord c2, double r2);

/// Point at unit distance from `base` such that the angle at `base` between
/// it and `ref` is `angle_deg`. Ccw rotates the direction base->ref
/// counterclockwise.
Coord place_by_angle(Coord base, Coord ref, double angle_deg, Turn turn);

/// 180 degree rotation of p about center.
Coord point_reflect(Coord p, Coord center);

/// Unsigned angle at `vertex` between rays to a and b, in degrees [0, 180].
double angle_deg(Coord a, Coord vertex, Coord b);

SegmentRelation segment_relation(Coord a1, Coord a2, Coord b1, Coord b2,
                                 double tol = kCoincidenceTol);

double point_segment_distance(Coord p, Coord a, Coord b);

}  // namespace matchstick::geom
