#pragma once

// Deterministic local solver for the average-cost trajectory program and
// its worst/average trade-off variant.
//
// Decision variables are (theta, t_1..t_k). The objective is
//   S(lambda) = lambda * S_W + (1 - lambda) * S_A
// where S_W is the certified worst-case cost of the poly-segment
// trajectory and S_A the certified average-cost bound (with its 1 + 1/k
// discretization slack). Constraints:
//   sin((c - 2 theta)/k) t_i >= 1 - cos((c - 2 theta)/k)
//   0 <= theta <= min((1 - eps) c / 2, pi/2 - eps)
// The substitution u_i = t_i - tan((c - 2 theta)/(2k)) turns the t
// constraints into simple bounds u_i >= 0, handled by a logarithmic
// barrier with decreasing weight; theta stays projected onto its box.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diskinspect {

struct NlpProblem {
    int k = 0;
    double c = 0.0;
    double eps = 1e-3;     // domain guard on the theta box
    double lambda = 0.0;   // 0 = pure average objective, 1 = pure worst case

    double theta_max() const;
    // Per-coordinate lower bound on t at a given theta: tan(((c-2t)/k)/2).
    double threshold(double theta) const;
};

struct SolveReport {
    double theta = 0.0;
    std::vector<double> t;
    double objective = 0.0;
    double worst = 0.0;  // S_W at the solution
    double avg = 0.0;    // S_A at the solution
    double kkt_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// S(lambda) and its analytic gradient with respect to (theta, t_1..t_k);
// grad is resized to k + 1 with the theta component first. Throws
// std::domain_error at the theta = +-pi/2 singularity. For lambda = 0
// this evaluates the average-cost program's objective verbatim.
double objective_and_gradient(const NlpProblem& p, double theta,
                              const std::vector<double>& t, std::vector<double>& grad);

// Both cost components at a point, without forming the combination.
void cost_components(const NlpProblem& p, double theta, const std::vector<double>& t,
                     double& worst, double& avg);

// Local minimizer from the given (theta, t) start, or from the default
// theta = pi/6, t_i = threshold + 0.5. Deterministic for a fixed start.
// Non-convergence within the iteration cap is reported via
// converged = false, never silently.
SolveReport solve(const NlpProblem& p,
                  std::optional<std::pair<double, std::vector<double>>> init = std::nullopt);

struct SweepRow {
    double grid = 0.0;  // c for partial sweeps, lambda for trade-off sweeps
    double objective = 0.0;
    double worst = 0.0;
    double avg = 0.0;
    double theta = 0.0;
    double kkt_residual = 0.0;
    bool converged = false;
    std::string regime;  // "nlp" or "radial" (partial sweep tie-break)
};

// Average-cost bound for each arc length in c_grid: the better of the
// solved program and, for c < pi, the closed-form radial bound with
// theta = c/2 (which wins up to c around 2.39). Grid points are
// warm-started from their predecessor; failures are recorded per row.
// DISKINSPECT_THREADS > 1 splits the grid into that many contiguous
// blocks dispatched concurrently.
std::vector<SweepRow> sweep_partial(const std::vector<double>& c_grid, int k, double eps);

// Trade-off sweep over lambda for the full perimeter (c = 2pi); rows
// carry (N_W, N_A) = (worst, avg) of the lambda-optimal trajectory.
std::vector<SweepRow> sweep_pareto(const std::vector<double>& lambda_grid, int k, double eps);

}  // namespace diskinspect
