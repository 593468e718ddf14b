#pragma once

// Shared helpers for the test suites. The minimizer here is the
// independent numerical oracle used to verify analytic minimizers; it is
// deliberately not shared with library code.

#include <cmath>
#include <functional>
#include <utility>

namespace testsupport {

// Coarse grid scan followed by golden-section refinement on the
// bracketing interval. Returns (argmin, min value).
inline std::pair<double, double> grid_golden_min(const std::function<double(double)>& f,
                                                 double lo, double hi, int grid = 400,
                                                 double xtol = 1e-13) {
    double best_x = lo, best_f = f(lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    }
    const double h = (hi - lo) / grid;
    double a = std::max(lo, best_x - h), b = std::min(hi, best_x + h);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = (a + b) / 2.0;
    return {xm, f(xm)};
}

}  // namespace testsupport
