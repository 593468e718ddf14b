#pragma once

// Poly-segment inspection trajectories: a deployment leg to A0 = (1, tan
// theta) followed by k waypoints A_i on the tangent lines at angles
// phi_i = 2 theta + (c - 2 theta) i / k, plus their discrete and certified
// continuous inspection costs.

#include <stdexcept>
#include <vector>

#include "diskinspect/closed_form.hpp"
#include "diskinspect/geometry.hpp"

namespace diskinspect {

// Parameters (theta, t_1..t_k, c, k) of one poly-segment trajectory.
struct TrajectorySpec {
    int k = 0;
    double theta = 0.0;
    double c = 0.0;
    std::vector<double> t;

    // Throws std::domain_error unless k >= 5, c in [0, 2pi],
    // 0 <= theta <= min(c/2, pi/2 - eps) and t has k entries.
    void validate() const;

    double angular_step() const { return (c - 2.0 * theta) / k; }
    double phi(int i) const { return 2.0 * theta + angular_step() * i; }
    Point waypoint(int i) const;  // A_0 .. A_k

    // Lower bound on each t_i that keeps every chord outside the open
    // disk: (1 - cos step)/sin step == tan(step/2).
    double feasibility_threshold() const;
};

// Raised when a spec fails the per-coordinate feasibility threshold.
class FeasibilityError : public std::runtime_error {
  public:
    FeasibilityError(const std::string& msg, double margin)
        : std::runtime_error(msg), margin_(margin) {}
    double margin() const { return margin_; }

  private:
    double margin_;
};

// Vertex path [O ->] A_0 -> A_1 -> ... -> A_k with cumulative lengths.
Polyline build_polyline(const TrajectorySpec& spec, bool include_center_leg);

// Discrete problem costs of the A_0..A_k part:
//   worst = sum ||A_{j-1} A_j||
//   avg   = (1/(k+1)) sum (k-j+1) ||A_{j-1} A_j||
CostPair discrete_costs(const TrajectorySpec& spec);

// min_i (t_i - threshold); the spec is feasible for the continuous
// problem iff this is >= 0. Returns +infinity when c <= 2 theta (the
// deployment point alone already covers the whole arc).
double feasibility_margin(const TrajectorySpec& spec);

// Certified upper bounds on the continuous partial-inspection costs:
//   worst = 1/cos theta + sum ||A_{j-1} A_j||
//   avg   = (1/c) log((1+sin t)/(1-sin t))
//           + (1 + 1/k)(1 - 2 theta/c)(1/cos theta + discrete avg)
// Throws FeasibilityError (carrying the margin) for infeasible specs.
CostPair continuous_costs(const TrajectorySpec& spec);

// Isbell-type trajectory for the full perimeter: center, (1, tan theta),
// tangent point P(2 theta), boundary arc to P(3pi/2), then the
// perpendicular drop to (1, -1). The arc is discretized as the
// circumscribed tangent polygon so that every arc point keeps a
// supporting tangent line on the path; an inscribed chord path would dip
// inside the disk and lose visibility of the points between touch points.
// Arrival times run late by at most (arc length) * step^2 / 12.
Polyline isbell_path(double theta, int arc_chords = 10000);

// Single radial segment O -> (1, tan theta).
Polyline radial_path(double theta);

}  // namespace diskinspect
