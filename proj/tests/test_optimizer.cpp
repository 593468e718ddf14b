#include <doctest.h>

#include <cmath>
#include <random>

#include "diskinspect/closed_form.hpp"
#include "diskinspect/geometry.hpp"
#include "diskinspect/optimizer.hpp"
#include "diskinspect/oracle.hpp"
#include "diskinspect/trajectory.hpp"

using namespace diskinspect;

namespace {

// Central finite differences of the lambda-objective, the independent
// check of the analytic gradient.
std::vector<double> fd_gradient(const NlpProblem& p, double theta, std::vector<double> t,
                                double h = 1e-6) {
    std::vector<double> g(t.size() + 1), scratch;
    auto eval = [&](double th, const std::vector<double>& tv) {
        return objective_and_gradient(p, th, tv, scratch);
    };
    g[0] = (eval(theta + h, t) - eval(theta - h, t)) / (2 * h);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double saved = t[i];
        t[i] = saved + h;
        const double fp = eval(theta, t);
        t[i] = saved - h;
        const double fm = eval(theta, t);
        t[i] = saved;
        g[i + 1] = (fp - fm) / (2 * h);
    }
    return g;
}

double rel_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("analytic gradient matches central differences at random feasible points") {
    const int k = 50;
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> uth(0.05, 1.4), uu(0.01, 1.0), ul(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const NlpProblem p{k, kTwoPi, 1e-3, ul(rng)};
        const double theta = uth(rng);
        std::vector<double> t(k);
        const double tau = p.threshold(theta);
        for (double& ti : t) ti = tau + uu(rng);
        std::vector<double> grad;
        objective_and_gradient(p, theta, t, grad);
        const auto fd = fd_gradient(p, theta, t);
        CHECK(rel_norm_diff(grad, fd) <= 1e-6);
    }
}

TEST_CASE("gradient also checks out away from c = 2pi") {
    const int k = 50;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uu(0.01, 1.0);
    for (double c : {1.0, kPi, 4.5}) {
        for (double lambda : {0.0, 0.3, 1.0}) {
            const NlpProblem p{k, c, 1e-3, lambda};
            const double theta = 0.45 * c / 2;
            std::vector<double> t(k);
            const double tau = p.threshold(theta);
            for (double& ti : t) ti = tau + uu(rng);
            std::vector<double> grad;
            objective_and_gradient(p, theta, t, grad);
            CHECK(rel_norm_diff(grad, fd_gradient(p, theta, t)) <= 1e-6);
        }
    }
}

TEST_CASE("lambda=0 objective is exactly the average-cost objective") {
    const int k = 20;
    const NlpProblem pavg{k, kTwoPi, 1e-3, 0.0};
    const double theta = 0.4;
    std::vector<double> t(k, 0.7), grad;
    const double obj = objective_and_gradient(pavg, theta, t, grad);
    double worst = 0.0, avg = 0.0;
    cost_components(pavg, theta, t, worst, avg);
    CHECK(obj == avg);  // bitwise: no worst-case admixture at lambda = 0
    // and the components match the trajectory evaluations
    TrajectorySpec spec{k, theta, kTwoPi, t};
    const Polyline path = build_polyline(spec, true);
    CHECK(worst == doctest::Approx(path.length()).epsilon(1e-12));
    CHECK(avg == doctest::Approx(continuous_costs(spec).avg).epsilon(1e-12));
}

TEST_CASE("objective at the theta = c/2 boundary collapses to the radial closed form") {
    const int k = 40;
    const double c = 2.0;
    const NlpProblem p{k, c, 1e-9, 0.0};
    std::vector<double> t1(k, 0.3), t2(k, 1.1), grad;
    const double f1v = objective_and_gradient(p, c / 2, t1, grad);
    const double f2v = objective_and_gradient(p, c / 2, t2, grad);
    CHECK(f1v == doctest::Approx(radial_avg_cost(c)).epsilon(1e-12));
    CHECK(f2v == doctest::Approx(radial_avg_cost(c)).epsilon(1e-12));
}

TEST_CASE("theta singularity raises a domain error") {
    const NlpProblem p{10, kTwoPi, 1e-3, 0.0};
    std::vector<double> t(10, 0.5), grad;
    CHECK_THROWS_AS(objective_and_gradient(p, kPi / 2, t, grad), std::domain_error);
}

TEST_CASE("solve is deterministic") {
    const NlpProblem p{60, kTwoPi, 1e-3, 0.25};
    const SolveReport a = solve(p);
    const SolveReport b = solve(p);
    CHECK(a.theta == b.theta);
    CHECK(a.objective == b.objective);
    CHECK(a.iterations == b.iterations);
    REQUIRE(a.t.size() == b.t.size());
    for (std::size_t i = 0; i < a.t.size(); ++i) CHECK(a.t[i] == b.t[i]);
}

TEST_CASE("solved points are feasible and converged") {
    for (double lambda : {0.0, 0.5, 1.0}) {
        const NlpProblem p{80, kTwoPi, 1e-3, lambda};
        const SolveReport rep = solve(p);
        CHECK(rep.converged);
        CHECK(rep.theta >= 0.0);
        CHECK(rep.theta <= p.theta_max());
        const double tau = p.threshold(rep.theta);
        double margin = 1e300;
        for (double ti : rep.t) margin = std::min(margin, ti - tau);
        CHECK(margin >= -1e-10);
        CHECK(rep.avg <= rep.worst);
    }
}

TEST_CASE("small solves reproduce independently computed optima") {
    // Reference values from an independent bound-constrained L-BFGS-B run
    // on the same objective (theta listed for the c = pi case).
    const NlpProblem p1{60, kTwoPi, 1e-3, 0.0};
    const SolveReport r1 = solve(p1);
    CHECK(r1.converged);
    CHECK(r1.objective == doctest::Approx(3.6031861).epsilon(2e-6));

    const NlpProblem p2{60, kPi, 1e-3, 0.0};
    const SolveReport r2 = solve(p2);
    CHECK(r2.converged);
    CHECK(r2.objective == doctest::Approx(1.8145745).epsilon(2e-6));
    CHECK(r2.theta == doctest::Approx(0.8162244).epsilon(1e-3));
}

TEST_CASE("warm start from a provided init is honored") {
    const NlpProblem p{60, kTwoPi, 1e-3, 0.0};
    const SolveReport cold = solve(p);
    const SolveReport warm = solve(p, std::make_pair(cold.theta, cold.t));
    CHECK(warm.converged);
    CHECK(warm.objective <= cold.objective + 1e-9);
    CHECK(warm.iterations < cold.iterations);
}

TEST_CASE("oracle certifies solved bounds") {
    const NlpProblem p{100, kTwoPi, 1e-3, 0.0};
    const SolveReport rep = solve(p);
    REQUIRE(rep.converged);
    TrajectorySpec spec{p.k, rep.theta, p.c, rep.t};
    const Polyline path = build_polyline(spec, true);
    const InspectionProfile prof = profile(path, p.c, 20000);
    CHECK(prof.avg <= rep.avg + 1e-3);
    CHECK(prof.max <= rep.worst + 1e-9);
}

TEST_CASE("sweep_partial picks the radial regime for small c") {
    const auto rows = sweep_partial({0.8, 2.0, 2.8, 3.5}, 60, 1e-3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].regime == "radial");
    CHECK(rows[0].objective == doctest::Approx(radial_avg_cost(0.8)).epsilon(1e-12));
    CHECK(rows[1].regime == "radial");
    CHECK(rows[2].regime == "nlp");
    CHECK(rows[3].regime == "nlp");
    for (const auto& r : rows) CHECK(r.converged);
}

TEST_CASE("sweep_pareto endpoints are ordered") {
    const auto rows = sweep_pareto({0.0, 0.5, 1.0}, 60, 1e-3);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.converged);
    CHECK(rows[0].avg < rows[2].avg);      // lambda = 0 optimizes the average
    CHECK(rows[2].worst < rows[0].worst);  // lambda = 1 optimizes the worst case
    CHECK(rows[1].worst <= rows[0].worst + 1e-6);
    CHECK(rows[1].avg <= rows[2].avg + 1e-6);
}
