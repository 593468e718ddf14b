#include "diskinspect/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace diskinspect {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-14;

InspectionProfile finish_profile(std::vector<double> phis, std::vector<double> times,
                                 const char* what) {
    // Collect maximal runs of uninspected samples before computing stats.
    std::vector<std::pair<double, double>> uncovered;
    bool prev_inf = false;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::isinf(times[i])) {
            if (prev_inf)
                uncovered.back().second = phis[i];
            else
                uncovered.push_back({phis[i], phis[i]});
            prev_inf = true;
        } else {
            prev_inf = false;
        }
    }
    if (!uncovered.empty()) {
        std::ostringstream msg;
        msg << what << ": " << uncovered.size() << " uninspected phi range(s):";
        for (const auto& [lo, hi] : uncovered) msg << " [" << lo << ", " << hi << "]";
        throw UncoveredArcError(msg.str(), std::move(uncovered));
    }

    InspectionProfile out;
    out.phis = std::move(phis);
    out.times = std::move(times);
    double sum = 0.0, mx = 0.0;
    for (double t : out.times) {
        sum += t;
        mx = std::max(mx, t);
    }
    out.avg = sum / static_cast<double>(out.times.size());
    out.max = mx;
    return out;
}

}  // namespace

double first_hit_time(const Polyline& path, double phi) {
    if (path.vertices.empty()) throw std::invalid_argument("first_hit_time: empty path");
    const double nx = std::cos(phi), ny = std::sin(phi);

    auto height = [&](const Point& p) { return p.x * nx + p.y * ny - 1.0; };

    double h_prev = height(path.vertices[0]);
    if (h_prev >= -kSlack) return 0.0;
    for (std::size_t j = 1; j < path.vertices.size(); ++j) {
        const double h = height(path.vertices[j]);
        if (h >= -kSlack) {
            const double rise = h - h_prev;
            double frac = rise > 0.0 ? (-kSlack - h_prev) / rise : 0.0;
            frac = std::clamp(frac, 0.0, 1.0);
            return path.cumlen[j - 1] + frac * (path.cumlen[j] - path.cumlen[j - 1]);
        }
        h_prev = h;
    }
    return kInf;
}

InspectionProfile profile(const Polyline& path, double c, int samples) {
    if (samples < 2) throw std::invalid_argument("profile: need at least 2 samples");
    if (!(c > 0.0 && c <= kTwoPi)) throw std::domain_error("profile: c outside (0, 2pi]");
    std::vector<double> phis(samples), times(samples);
    for (int i = 0; i < samples; ++i) {
        phis[i] = (i + 0.5) * c / samples;
        times[i] = first_hit_time(path, phis[i]);
    }
    return finish_profile(std::move(phis), std::move(times), "profile");
}

InspectionProfile multi_agent_profile(const std::vector<Polyline>& paths, int samples) {
    if (paths.empty()) throw std::invalid_argument("multi_agent_profile: no paths");
    if (samples < 2) throw std::invalid_argument("multi_agent_profile: need at least 2 samples");
    std::vector<double> phis(samples), times(samples);
    for (int i = 0; i < samples; ++i) {
        phis[i] = (i + 0.5) * kTwoPi / samples;
        double best = kInf;
        for (const Polyline& p : paths) best = std::min(best, first_hit_time(p, phis[i]));
        times[i] = best;
    }
    return finish_profile(std::move(phis), std::move(times), "multi_agent_profile");
}

}  // namespace diskinspect
