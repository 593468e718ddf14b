#include "diskinspect/trajectory.hpp"

#include <cmath>
#include <limits>

namespace diskinspect {

namespace {
constexpr double kTol = 1e-12;
}

void TrajectorySpec::validate() const {
    if (k < 5) throw std::domain_error("TrajectorySpec: k must be at least 5");
    if (!(c >= -kTol && c <= kTwoPi + kTol)) throw std::domain_error("TrajectorySpec: c outside [0, 2pi]");
    if (!(theta >= -kTol && theta <= c / 2.0 + kTol))
        throw std::domain_error("TrajectorySpec: theta outside [0, c/2]");
    if (!(theta < kPi / 2.0)) throw std::domain_error("TrajectorySpec: theta must be below pi/2");
    if (static_cast<int>(t.size()) != k) throw std::domain_error("TrajectorySpec: t must have k entries");
}

Point TrajectorySpec::waypoint(int i) const {
    if (i == 0) return {1.0, std::tan(theta)};
    return tangent_point(phi(i), t[static_cast<std::size_t>(i) - 1]);
}

double TrajectorySpec::feasibility_threshold() const {
    return std::tan(angular_step() / 2.0);
}

Polyline build_polyline(const TrajectorySpec& spec, bool include_center_leg) {
    spec.validate();
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(spec.k) + 2);
    if (include_center_leg) pts.push_back({0.0, 0.0});
    for (int i = 0; i <= spec.k; ++i) pts.push_back(spec.waypoint(i));
    return make_polyline(std::move(pts));
}

CostPair discrete_costs(const TrajectorySpec& spec) {
    spec.validate();
    double worst = 0.0, weighted = 0.0;
    Point prev = spec.waypoint(0);
    for (int j = 1; j <= spec.k; ++j) {
        const Point cur = spec.waypoint(j);
        const double len = distance(prev, cur);
        worst += len;
        weighted += (spec.k - j + 1) * len;
        prev = cur;
    }
    return {worst, weighted / (spec.k + 1)};
}

double feasibility_margin(const TrajectorySpec& spec) {
    spec.validate();
    if (spec.c - 2.0 * spec.theta <= kTol) return std::numeric_limits<double>::infinity();
    const double threshold = spec.feasibility_threshold();
    double margin = std::numeric_limits<double>::infinity();
    for (double ti : spec.t) margin = std::min(margin, ti - threshold);
    return margin;
}

CostPair continuous_costs(const TrajectorySpec& spec) {
    const double margin = feasibility_margin(spec);
    if (margin < 0.0)
        throw FeasibilityError("continuous_costs: t_i below the chord feasibility threshold", margin);

    const double sec = 1.0 / std::cos(spec.theta);
    const double log_term =
        std::log((1.0 + std::sin(spec.theta)) / (1.0 - std::sin(spec.theta)));
    if (spec.c <= kTol) return {1.0, 1.0};  // nothing beyond reaching the boundary
    if (spec.c - 2.0 * spec.theta <= kTol) {
        // Arc fully covered on arrival at A_0; the waypoints are idle.
        return {sec, log_term / spec.c};
    }

    const CostPair discrete = discrete_costs(spec);
    const double slack = 1.0 + 1.0 / spec.k;
    const double weight = 1.0 - 2.0 * spec.theta / spec.c;
    return {sec + discrete.worst, log_term / spec.c + slack * weight * (sec + discrete.avg)};
}

Polyline isbell_path(double theta, int arc_chords) {
    if (!(theta >= 0.0 && theta < kPi / 2.0))
        throw std::domain_error("isbell_path: theta outside [0, pi/2)");
    if (arc_chords < 1) throw std::domain_error("isbell_path: need at least one chord");

    const double a0 = 2.0 * theta;
    const double a1 = 1.5 * kPi;
    const double step = (a1 - a0) / arc_chords;
    const double r = 1.0 / std::cos(step / 2.0);

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(arc_chords) + 4);
    pts.push_back({0.0, 0.0});
    pts.push_back({1.0, std::tan(theta)});
    pts.push_back({std::cos(a0), std::sin(a0)});
    for (int m = 0; m < arc_chords; ++m) {
        const double a = a0 + (m + 0.5) * step;  // vertex between touch points m, m+1
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    pts.push_back({std::cos(a1), std::sin(a1)});
    pts.push_back({1.0, -1.0});
    return make_polyline(std::move(pts));
}

Polyline radial_path(double theta) {
    if (!(theta >= 0.0 && theta < kPi / 2.0))
        throw std::domain_error("radial_path: theta outside [0, pi/2)");
    return make_polyline({{0.0, 0.0}, {1.0, std::tan(theta)}});
}

}  // namespace diskinspect
