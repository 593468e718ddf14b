#pragma once

// Brute-force ground truth: first-inspection times of perimeter points
// computed directly from the halfspace predicate, independent of any
// closed-form or NLP bound elsewhere in the library.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diskinspect/geometry.hpp"

namespace diskinspect {

// Raised by profile()/multi_agent_profile() when some sampled perimeter
// point is never inspected. uncovered() lists maximal sampled phi ranges
// with infinite inspection time.
class UncoveredArcError : public std::runtime_error {
  public:
    UncoveredArcError(const std::string& msg, std::vector<std::pair<double, double>> ranges)
        : std::runtime_error(msg), uncovered_(std::move(ranges)) {}
    const std::vector<std::pair<double, double>>& uncovered() const { return uncovered_; }

  private:
    std::vector<std::pair<double, double>> uncovered_;
};

struct InspectionProfile {
    std::vector<double> phis;   // sampled perimeter parameters, ascending
    std::vector<double> times;  // first-inspection times
    double avg = 0.0;
    double max = 0.0;
};

// Smallest arc length s along the path whose point satisfies
// point . (cos phi, sin phi) >= 1. The crossing is solved exactly per
// segment (the condition is affine along each one); +infinity if the path
// never inspects P(phi). A 1e-14 slack on the condition absorbs rounding
// on tangential contacts and is otherwise negligible.
double first_hit_time(const Polyline& path, double phi);

// First-inspection times at `samples` midpoints of equal subintervals of
// [0, c]. Throws UncoveredArcError if any sample is never inspected.
InspectionProfile profile(const Polyline& path, double c, int samples);

// Joint profile of several agents over the full perimeter [0, 2pi]:
// per sample, the earliest hit over all paths.
InspectionProfile multi_agent_profile(const std::vector<Polyline>& paths, int samples);

}  // namespace diskinspect
