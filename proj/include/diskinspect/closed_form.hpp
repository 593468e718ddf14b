#pragma once

// Closed-form inspection costs and their exact minimizers: the piecewise
// worst-case optimum for partial inspection, the two curve-family lengths
// f1/f2 behind it, the Isbell-type worst/average performance, the radial
// average formula, Gluss's average-cost expression, and naive baselines.

#include <stdexcept>

namespace diskinspect {

// (worst-case cost, average-case cost) of one trajectory; a Pareto point.
struct CostPair {
    double worst = 0.0;
    double avg = 0.0;
};

enum class WorstCaseRegime {
    TYPE1_HALF_ANGLE,  // c <= 2pi/3: perpendicular drop, theta* = c/2
    TYPE1_PI_MINUS_C,  // 2pi/3 < c <= 5pi/6: theta* = pi - c
    TYPE2_ISBELL,      // c > 5pi/6: boundary-following curve, theta* = pi/6
};

struct WorstCaseBreakdown {
    double cost = 0.0;
    WorstCaseRegime regime = WorstCaseRegime::TYPE1_HALF_ANGLE;
    double theta_star = 0.0;  // optimal deployment angle
};

// Optimal worst-case cost of inspecting an arc of length c from the center.
//   1/cos(c/2)              for c <= 2pi/3
//   1 - 2 cos c             for 2pi/3 < c <= 5pi/6
//   1 + sqrt(3) + c - 5pi/6 for c > 5pi/6
// Continuous across the regime boundaries (values 2 and 1 + sqrt(3)).
WorstCaseBreakdown worst_case_partial_cost(double c);

// Optimal worst-case cost for n agents inspecting the full perimeter:
// equals worst_case_partial_cost(2pi/n).
double worst_case_n_cost(int n);

// Length of the type-1 curve (one or two perimeter contacts) with
// deployment angle theta. Requires theta in [0, pi/2), theta >= c/2 - pi/4,
// and c in [0, 3pi/2].
double f1(double theta, double c);

// Length of the type-2 (boundary-following) curve. Requires theta in
// [0, pi/2), theta <= c/2 - pi/4, and c in [pi/2, 2pi].
double f2(double theta, double c);

// Analytic minimizers of f1/f2 over their theta domains.
//   argmin_f1: c/2 | pi - c | c/2 - pi/4   (c in [0, 3pi/2])
//   argmin_f2: c/2 - pi/4 | pi/6           (c in [pi/2, 2pi])
double argmin_f1(double c);
double argmin_f2(double c);

// Worst-case cost of the Isbell-type trajectory with deployment angle
// theta for the full perimeter: 1/cos t + tan t + 3pi/2 - 2t + 1.
double isbell_worst(double theta);

// Average-case cost of the same trajectory (uniform perimeter point).
double isbell_avg(double theta);

// Average inspection cost of the single radial segment O -> (1, tan(c/2))
// covering an arc of length c: (1/c) log((1+sin(c/2))/(1-sin(c/2))).
// Requires 0 < c < pi.
double radial_avg_cost(double c);

// Gluss's average-cost term x(theta) for his heuristic trajectories,
// evaluated exactly as published. Minimized at theta = 0.592334 with
// value 3.007998991.
double gluss_x(double theta);

// Variant of gluss_x with the factor (1 - theta/pi) miscopied as
// (1 - 2 theta/pi). Reproduces the historical under-reported evaluation
// (about 2.8424 near the minimizer of the correct formula); kept only as
// a regression anchor for that documented numerical error.
double gluss_x_with_transcription_error(double theta);

// Baselines: worst case 1 + c (walk out, trace the arc) and average case
// 1 + c/2 for the randomized variant.
CostPair naive_costs(double c);

}  // namespace diskinspect
