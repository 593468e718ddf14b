// Command-line front end for the disk-inspection library.
//
// Exit codes: 0 success, 2 validation error, 3 solver non-convergence,
// 4 verification failure.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskinspect/closed_form.hpp"
#include "diskinspect/io.hpp"
#include "diskinspect/optimizer.hpp"
#include "diskinspect/oracle.hpp"
#include "diskinspect/trajectory.hpp"

using namespace diskinspect;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitVerifyFailed = 4;

double deg2rad(double d) { return d * kPi / 180.0; }

const char* regime_name(WorstCaseRegime r) {
    switch (r) {
        case WorstCaseRegime::TYPE1_HALF_ANGLE: return "type1-half-angle";
        case WorstCaseRegime::TYPE1_PI_MINUS_C: return "type1-pi-minus-c";
        case WorstCaseRegime::TYPE2_ISBELL: return "type2-isbell";
    }
    return "?";
}

std::vector<double> make_grid(double from, double to, double step) {
    std::vector<double> grid;
    for (double v = from; v <= to + step * 1e-9; v += step) grid.push_back(std::min(v, to));
    if (grid.empty() || grid.back() < to - step * 1e-9) grid.push_back(to);
    return grid;
}

int cmd_worst(double c, int n, bool use_deg) {
    if (use_deg) c = deg2rad(c);
    WorstCaseBreakdown wc;
    if (n > 0) {
        wc = worst_case_partial_cost(std::min(kTwoPi, kTwoPi / n));
        wc.cost = worst_case_n_cost(n);
        std::cout << "n " << n << " (per-agent arc " << kTwoPi / n << ")\n";
    } else {
        wc = worst_case_partial_cost(c);
        std::cout << "c " << c << "\n";
    }
    std::cout << "cost " << wc.cost << "\nregime " << regime_name(wc.regime) << "\ntheta_star "
              << wc.theta_star << "\n";
    return kExitOk;
}

int cmd_isbell(double theta, bool use_deg, const std::string& family_csv, double from, double to,
               double step) {
    if (use_deg) theta = deg2rad(theta);
    std::cout << "theta " << theta << "\nworst " << isbell_worst(theta) << "\navg "
              << isbell_avg(theta) << "\n";
    if (!family_csv.empty()) {
        std::ostringstream os;
        os << std::setprecision(17) << "theta,worst,avg\n";
        for (double th : make_grid(from, to, step))
            os << th << ',' << isbell_worst(th) << ',' << isbell_avg(th) << '\n';
        write_file(family_csv, os.str());
        std::cout << "family curve written to " << family_csv << "\n";
    }
    return kExitOk;
}

int cmd_gluss(double theta, bool use_deg, bool show_transcription_error) {
    if (use_deg) theta = deg2rad(theta);
    std::cout << "theta " << theta << "\nx " << gluss_x(theta) << "\n";
    if (show_transcription_error)
        std::cout << "x_with_transcription_error " << gluss_x_with_transcription_error(theta)
                  << "\n";
    return kExitOk;
}

int cmd_avg_optimize(double c, int k, double eps, double lambda, bool use_deg,
                     const std::string& out_prefix) {
    if (use_deg) c = deg2rad(c);
    const NlpProblem prob{k, c, eps, lambda};
    const SolveReport rep = solve(prob);
    std::cout << "objective " << rep.objective << "\nworst " << rep.worst << "\navg " << rep.avg
              << "\ntheta " << rep.theta << "\niterations " << rep.iterations << "\nkkt_residual "
              << rep.kkt_residual << "\nconverged " << (rep.converged ? "yes" : "no") << "\n";

    if (!out_prefix.empty()) {
        TrajectorySpec spec{k, rep.theta, c, rep.t};
        const Polyline path = build_polyline(spec, true);
        write_file(out_prefix + ".report.json", report_to_json(rep));
        write_file(out_prefix + ".traj.json", spec_to_json(spec));
        write_file(out_prefix + ".traj.csv", polyline_csv(path));
        write_file(out_prefix + ".traj.svg", polyline_svg(path, c));
        std::cout << "artifacts written with prefix " << out_prefix << "\n";
    }
    return rep.converged ? kExitOk : kExitNoConvergence;
}

int cmd_sweep_partial(double from, double to, double step, int k, double eps,
                      const std::string& out_csv) {
    const auto rows = sweep_partial(make_grid(from, to, step), k, eps);
    const std::string csv = sweep_csv(rows, "c");
    if (out_csv.empty())
        std::cout << csv;
    else {
        write_file(out_csv, csv);
        std::cout << rows.size() << " rows written to " << out_csv << "\n";
    }
    for (const SweepRow& r : rows)
        if (!r.converged) return kExitNoConvergence;
    return kExitOk;
}

int cmd_tradeoff(double from, double to, double step, int k, double eps,
                 const std::string& out_csv) {
    const auto rows = sweep_pareto(make_grid(from, to, step), k, eps);
    const std::string csv = sweep_csv(rows, "lambda");
    if (out_csv.empty())
        std::cout << csv;
    else {
        write_file(out_csv, csv);
        std::cout << rows.size() << " rows written to " << out_csv << "\n";
    }
    for (const SweepRow& r : rows)
        if (!r.converged) return kExitNoConvergence;
    return kExitOk;
}

int cmd_verify(const std::string& traj_file, int samples, double tol, const std::string& out_csv) {
    const std::string text = read_file(traj_file);
    Polyline path;
    std::optional<TrajectorySpec> spec;
    if (json_is_polyline(text)) {
        path = polyline_from_json(text);
    } else {
        spec = spec_from_json(text);
        path = build_polyline(*spec, true);
    }
    const double c = spec ? spec->c : kTwoPi;

    InspectionProfile prof;
    try {
        prof = profile(path, c, samples);
    } catch (const UncoveredArcError& e) {
        std::cout << "INFEASIBLE: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    if (!out_csv.empty()) write_file(out_csv, profile_csv(prof));

    std::cout << "samples " << samples << "\noracle_avg " << prof.avg << "\noracle_max "
              << prof.max << "\n";
    if (spec) {
        const CostPair bound = continuous_costs(*spec);
        std::cout << "bound_avg " << bound.avg << "\nbound_worst " << bound.worst << "\n";
        const bool ok_avg = prof.avg <= bound.avg + tol;
        const bool ok_max = prof.max <= bound.worst + 1e-9;
        std::cout << "oracle avg <= bound: " << (ok_avg ? "PASS" : "FAIL") << "\n";
        std::cout << "oracle max <= worst: " << (ok_max ? "PASS" : "FAIL") << "\n";
        if (!ok_avg || !ok_max) return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_table1(int k, int n_max, double eps, const std::string& out_csv) {
    std::ostringstream os;
    os << std::setprecision(17) << "n,avg_cost,theta\n";
    bool all_converged = true;
    for (int n = 1; n <= n_max; ++n) {
        if (n <= 2) {
            const NlpProblem prob{k, kTwoPi / n, eps, 0.0};
            const SolveReport rep = solve(prob);
            all_converged = all_converged && rep.converged;
            os << n << ',' << rep.objective << ',' << rep.theta << '\n';
        } else {
            os << n << ',' << radial_avg_cost(kTwoPi / n) << ',' << kPi / n << '\n';
        }
    }
    if (out_csv.empty())
        std::cout << os.str();
    else {
        write_file(out_csv, os.str());
        std::cout << "table written to " << out_csv << "\n";
    }
    return all_converged ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal and near-optimal unit-disk perimeter inspection"};
    app.require_subcommand(1);
    std::cout << std::setprecision(10);

    bool use_deg = false;
    app.add_flag("--deg", use_deg, "interpret input angles/arcs as degrees");

    // worst
    auto* worst = app.add_subcommand("worst", "optimal worst-case inspection cost");
    double w_c = kTwoPi;
    int w_n = 0;
    auto* w_copt = worst->add_option("--c", w_c, "arc length to inspect");
    auto* w_nopt = worst->add_option("--n", w_n, "number of agents (full perimeter)");
    w_copt->excludes(w_nopt);

    // isbell
    auto* isbell = app.add_subcommand("isbell", "Isbell-type trajectory performance");
    double i_theta = kPi / 6.0, i_from = 0.4, i_to = 0.75, i_step = 0.001;
    std::string i_family;
    isbell->add_option("--theta", i_theta, "deployment angle");
    isbell->add_option("--family-csv", i_family, "write the (theta, worst, avg) family curve");
    isbell->add_option("--from", i_from, "family curve start");
    isbell->add_option("--to", i_to, "family curve end");
    isbell->add_option("--step", i_step, "family curve step");

    // gluss
    auto* gluss = app.add_subcommand("gluss", "Gluss's average-cost term x(theta)");
    double g_theta = 0.592334;
    bool g_err = false;
    gluss->add_option("--theta", g_theta, "angle");
    gluss->add_flag("--transcription-error", g_err, "also print the historically miscopied variant");

    // avg-optimize
    auto* avgopt = app.add_subcommand("avg-optimize", "solve the trajectory program");
    double a_c = kTwoPi, a_eps = 1e-3, a_lambda = 0.0;
    int a_k = 1000;
    std::string a_out;
    avgopt->add_option("--c", a_c, "arc length to inspect");
    avgopt->add_option("--k", a_k, "discretization count");
    avgopt->add_option("--eps", a_eps, "theta box guard");
    avgopt->add_option("--lambda", a_lambda, "worst-case weight in [0, 1]");
    avgopt->add_option("--out", a_out, "output prefix for report/trajectory artifacts");

    // sweep-partial
    auto* sweep = app.add_subcommand("sweep-partial", "average-cost bound over a grid of c");
    double s_from = 0.01, s_to = kTwoPi, s_step = 0.01, s_eps = 1e-3;
    int s_k = 1000;
    std::string s_out;
    sweep->add_option("--from", s_from, "first c");
    sweep->add_option("--to", s_to, "last c");
    sweep->add_option("--step", s_step, "grid step");
    sweep->add_option("--k", s_k, "discretization count");
    sweep->add_option("--eps", s_eps, "theta box guard");
    sweep->add_option("--out", s_out, "CSV output path (stdout if omitted)");

    // tradeoff
    auto* trade = app.add_subcommand("tradeoff", "Pareto sweep over lambda");
    double t_from = 0.0, t_to = 1.0, t_step = 0.01, t_eps = 1e-3;
    int t_k = 1000;
    std::string t_out;
    trade->add_option("--from", t_from, "first lambda");
    trade->add_option("--to", t_to, "last lambda");
    trade->add_option("--step", t_step, "grid step");
    trade->add_option("--k", t_k, "discretization count");
    trade->add_option("--eps", t_eps, "theta box guard");
    trade->add_option("--out", t_out, "CSV output path (stdout if omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "oracle cross-check of a trajectory file");
    std::string v_file, v_out;
    int v_samples = 20000;
    double v_tol = 1e-3;
    verify->add_option("--traj", v_file, "trajectory JSON (spec or polyline)")->required();
    verify->add_option("--samples", v_samples, "perimeter sample count");
    verify->add_option("--tol", v_tol, "allowed oracle-average excess over the bound");
    verify->add_option("--out", v_out, "profile CSV output path");

    // table1
    auto* table = app.add_subcommand("table1", "average-cost bounds for n = 1..n_max agents");
    int tb_k = 2000, tb_nmax = 12;
    double tb_eps = 1e-3;
    std::string tb_out;
    table->add_option("--k", tb_k, "discretization count for n = 1, 2");
    table->add_option("--n-max", tb_nmax, "largest agent count");
    table->add_option("--eps", tb_eps, "theta box guard");
    table->add_option("--out", tb_out, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (worst->parsed())
            return cmd_worst(w_c, w_nopt->count() ? w_n : 0, use_deg);
        if (isbell->parsed())
            return cmd_isbell(i_theta, use_deg, i_family, i_from, i_to, i_step);
        if (gluss->parsed())
            return cmd_gluss(g_theta, use_deg, g_err);
        if (avgopt->parsed())
            return cmd_avg_optimize(a_c, a_k, a_eps, a_lambda, use_deg, a_out);
        if (sweep->parsed())
            return cmd_sweep_partial(s_from, s_to, s_step, s_k, s_eps, s_out);
        if (trade->parsed())
            return cmd_tradeoff(t_from, t_to, t_step, t_k, t_eps, t_out);
        if (verify->parsed())
            return cmd_verify(v_file, v_samples, v_tol, v_out);
        if (table->parsed())
            return cmd_table1(tb_k, tb_nmax, tb_eps, tb_out);
    } catch (const UncoveredArcError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
