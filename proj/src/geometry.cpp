#include "diskinspect/geometry.hpp"

#include <cmath>

namespace diskinspect {

double Point::norm() const { return std::hypot(x, y); }

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double normalize_angle(double a) {
    double m = std::fmod(a, kTwoPi);
    if (m < 0.0) m += kTwoPi;
    return m;
}

Point perimeter_point(double t) {
    if (!(t >= 0.0 && t <= kTwoPi))
        throw std::domain_error("perimeter_point: t outside [0, 2pi]");
    return {std::cos(t), std::sin(t)};
}

Point tangent_point(double phi, double t) {
    return {std::cos(phi) + t * std::sin(phi), std::sin(phi) - t * std::cos(phi)};
}

Point tangent_direction(double phi) { return {std::sin(phi), -std::cos(phi)}; }

bool inspects(const Point& agent, double phi) {
    return agent.x * std::cos(phi) + agent.y * std::sin(phi) >= 1.0 - kHalfspaceTol;
}

std::pair<double, double> inspected_arc(const Point& agent) {
    double r = agent.norm();
    if (r < 1.0 - 1e-12) throw std::domain_error("inspected_arc: point inside the disk");
    if (r < 1.0) r = 1.0;
    const double phi = std::atan2(agent.y, agent.x);
    const double half = std::acos(std::min(1.0, 1.0 / r));
    return {phi - half, phi + half};
}

double tangent_param(const Point& p, double phi) {
    const Point n{std::cos(phi), std::sin(phi)};
    if (std::abs(p.dot(n) - 1.0) > kHalfspaceTol)
        throw std::domain_error("tangent_param: point not on the tangent line");
    return p.dot(tangent_direction(phi));
}

bool segment_covers(const Point& a, const Point& b, double phi_lo, double phi_hi) {
    const double gap = phi_hi - phi_lo;
    if (!(gap >= 0.0 && gap < kPi / 2.0))
        throw std::domain_error("segment_covers: angular gap must lie in [0, pi/2)");
    double t1, t2;
    try {
        t1 = tangent_param(a, phi_lo);
        t2 = tangent_param(b, phi_hi);
    } catch (const std::domain_error&) {
        return false;  // endpoints off their tangent lines: condition not met
    }
    // Degenerate arc: any point of the tangent line inspects its touch point.
    if (gap <= 1e-15) return true;
    const double threshold = std::tan(gap / 2.0);  // == (1 - cos g)/sin g
    return t1 >= -1e-12 && t2 >= threshold - 1e-12;
}

Polyline make_polyline(std::vector<Point> vertices) {
    if (vertices.empty()) throw std::invalid_argument("make_polyline: no vertices");
    Polyline p;
    p.vertices = std::move(vertices);
    p.cumlen.resize(p.vertices.size());
    p.cumlen[0] = 0.0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        p.cumlen[i] = p.cumlen[i - 1] + distance(p.vertices[i - 1], p.vertices[i]);
    return p;
}

Polyline rotated(const Polyline& path, double a) {
    const double ca = std::cos(a), sa = std::sin(a);
    Polyline out;
    out.vertices.reserve(path.vertices.size());
    for (const Point& v : path.vertices)
        out.vertices.push_back({ca * v.x - sa * v.y, sa * v.x + ca * v.y});
    out.cumlen = path.cumlen;  // rotation preserves lengths
    return out;
}

}  // namespace diskinspect
