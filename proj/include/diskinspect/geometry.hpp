#pragma once

// Tangent/visibility primitives on the unit disk centered at the origin.
//
// The perimeter is parameterized as P(t) = (cos t, sin t), t in [0, 2pi].
// L(phi, t) = P(phi) + t*(sin phi, -cos phi) is the line tangent to the
// disk at P(phi). A point inspects P(phi) exactly when it lies in the
// closed halfspace of L(phi) that excludes the disk interior, i.e. when
// its dot product with (cos phi, sin phi) is at least 1.

#include <stdexcept>
#include <utility>
#include <vector>

namespace diskinspect {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Tolerance for the closed-halfspace inspection test (dot >= 1 - tol).
inline constexpr double kHalfspaceTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& r) const { return {x + r.x, y + r.y}; }
    Point operator-(const Point& r) const { return {x - r.x, y - r.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    double dot(const Point& r) const { return x * r.x + y * r.y; }
    double norm() const;
};

double distance(const Point& a, const Point& b);

// Wrap an angle to [0, 2pi). Applied at API boundaries only.
double normalize_angle(double a);

// P(t) = (cos t, sin t). Requires t in [0, 2pi].
Point perimeter_point(double t);

// L(phi, t); lies at distance sqrt(1 + t^2) from the origin.
Point tangent_point(double phi, double t);

// Direction vector of L(phi, .), i.e. (sin phi, -cos phi).
Point tangent_direction(double phi);

// Closed-halfspace test of the inspection predicate. Intended for points
// on or outside the unit circle; interior points never inspect anything.
bool inspects(const Point& agent, double phi);

// Angular interval [phi - arccos(1/r), phi + arccos(1/r)] of perimeter
// points inspected from a point with polar coordinates (r, phi), r >= 1.
// r within 1e-12 below 1 is clamped to 1 (tangent-point roundoff).
std::pair<double, double> inspected_arc(const Point& agent);

// Parameter t with p == L(phi, t), or throws if p is off the line by
// more than kHalfspaceTol.
double tangent_param(const Point& p, double phi);

// Sufficient condition for the segment A->B to inspect every perimeter
// point of [phi_lo, phi_hi]: A on L(phi_lo) with parameter t1 >= 0 and
// B on L(phi_hi) with parameter t2 >= (1 - cos g)/sin g, g the gap.
// Points off their tangent lines make the condition fail (returns false).
// Requires 0 <= phi_hi - phi_lo < pi/2.
bool segment_covers(const Point& a, const Point& b, double phi_lo, double phi_hi);

// Unit-speed path through an ordered vertex list. cumlen[i] is the exact
// Euclidean length of the path up to vertex i (equivalently, arrival time).
struct Polyline {
    std::vector<Point> vertices;
    std::vector<double> cumlen;

    double length() const { return cumlen.empty() ? 0.0 : cumlen.back(); }
    std::size_t size() const { return vertices.size(); }
};

// Builds the cumulative lengths; requires at least one vertex.
Polyline make_polyline(std::vector<Point> vertices);

// Path rotated about the origin by angle a.
Polyline rotated(const Polyline& path, double a);

}  // namespace diskinspect
