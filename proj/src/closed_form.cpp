#include "diskinspect/closed_form.hpp"

#include <cmath>

#include "diskinspect/geometry.hpp"

namespace diskinspect {

namespace {

constexpr double kDomainTol = 1e-12;

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

double log_sec_integral(double theta) {
    // 2 * integral_0^theta sec = log((1+sin)/(1-sin))
    return std::log((1.0 + std::sin(theta)) / (1.0 - std::sin(theta)));
}

}  // namespace

WorstCaseBreakdown worst_case_partial_cost(double c) {
    require(c >= -kDomainTol && c <= kTwoPi + kDomainTol, "worst_case_partial_cost: c outside [0, 2pi]");
    WorstCaseBreakdown out;
    if (c <= 2.0 * kPi / 3.0) {
        out.cost = 1.0 / std::cos(c / 2.0);
        out.regime = WorstCaseRegime::TYPE1_HALF_ANGLE;
        out.theta_star = c / 2.0;
    } else if (c <= 5.0 * kPi / 6.0) {
        out.cost = 1.0 - 2.0 * std::cos(c);
        out.regime = WorstCaseRegime::TYPE1_PI_MINUS_C;
        out.theta_star = kPi - c;
    } else {
        out.cost = 1.0 + std::sqrt(3.0) + c - 5.0 * kPi / 6.0;
        out.regime = WorstCaseRegime::TYPE2_ISBELL;
        out.theta_star = kPi / 6.0;
    }
    return out;
}

double worst_case_n_cost(int n) {
    require(n >= 1, "worst_case_n_cost: n must be positive");
    if (n <= 2) return 1.0 + std::sqrt(3.0) + kTwoPi / n - 5.0 * kPi / 6.0;
    return 1.0 / std::cos(kPi / n);
}

double f1(double theta, double c) {
    require(c >= -kDomainTol && c <= 1.5 * kPi + kDomainTol, "f1: c outside [0, 3pi/2]");
    require(theta >= -kDomainTol && theta < kPi / 2.0, "f1: theta outside [0, pi/2)");
    require(theta >= c / 2.0 - kPi / 4.0 - kDomainTol, "f1: theta below c/2 - pi/4");
    return (1.0 + std::sin(c - theta - kPi / 2.0)) / std::cos(theta) + 1.0;
}

double f2(double theta, double c) {
    require(c >= kPi / 2.0 - kDomainTol && c <= kTwoPi + kDomainTol, "f2: c outside [pi/2, 2pi]");
    require(theta >= -kDomainTol && theta < kPi / 2.0, "f2: theta outside [0, pi/2)");
    require(theta <= c / 2.0 - kPi / 4.0 + kDomainTol, "f2: theta above c/2 - pi/4");
    return 1.0 / std::cos(theta) + std::tan(theta) + c - kPi / 2.0 - 2.0 * theta + 1.0;
}

double argmin_f1(double c) {
    require(c >= -kDomainTol && c <= 1.5 * kPi + kDomainTol, "argmin_f1: c outside [0, 3pi/2]");
    if (c <= 2.0 * kPi / 3.0) return c / 2.0;
    if (c <= 5.0 * kPi / 6.0) return kPi - c;
    return c / 2.0 - kPi / 4.0;
}

double argmin_f2(double c) {
    require(c >= kPi / 2.0 - kDomainTol && c <= kTwoPi + kDomainTol, "argmin_f2: c outside [pi/2, 2pi]");
    if (c <= 5.0 * kPi / 6.0) return c / 2.0 - kPi / 4.0;
    return kPi / 6.0;
}

double isbell_worst(double theta) {
    require(theta >= -kDomainTol && theta < kPi / 2.0, "isbell_worst: theta outside [0, pi/2)");
    return 1.0 / std::cos(theta) + std::tan(theta) + 1.5 * kPi - 2.0 * theta + 1.0;
}

double isbell_avg(double theta) {
    require(theta >= -kDomainTol && theta < kPi / 2.0, "isbell_avg: theta outside [0, pi/2)");
    // Sum of the three phase integrals: the initial radial leg, the arc
    // traversal, and the final perpendicular drop, scaled by 1/(2pi).
    const double sum = log_sec_integral(theta) + 2.0 * theta * theta - 4.0 * kPi * theta +
                       2.0 * (kPi - theta) * std::tan(theta) + 2.0 * (kPi - theta) / std::cos(theta) +
                       15.0 * kPi * kPi / 8.0 + std::log(2.0);
    return sum / kTwoPi;
}

double radial_avg_cost(double c) {
    require(c > 0.0 && c < kPi - kDomainTol, "radial_avg_cost: c outside (0, pi)");
    return log_sec_integral(c / 2.0) / c;
}

double gluss_x(double theta) {
    require(theta >= -kDomainTol && theta < kPi / 2.0, "gluss_x: theta outside [0, pi/2)");
    return 1.0 + log_sec_integral(theta) / kTwoPi +
           (1.0 - theta / kPi) * (1.0 / std::cos(theta) + std::tan(theta) - 1.0) + 0.75 * kPi -
           2.0 * theta + theta * (theta - 1.0) / kPi;
}

double gluss_x_with_transcription_error(double theta) {
    require(theta >= -kDomainTol && theta < kPi / 2.0, "gluss_x variant: theta outside [0, pi/2)");
    return 1.0 + log_sec_integral(theta) / kTwoPi +
           (1.0 - 2.0 * theta / kPi) * (1.0 / std::cos(theta) + std::tan(theta) - 1.0) + 0.75 * kPi -
           2.0 * theta + theta * (theta - 1.0) / kPi;
}

CostPair naive_costs(double c) {
    return {1.0 + c, 1.0 + c / 2.0};
}

}  // namespace diskinspect
