#include "diskinspect/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <thread>

#include "diskinspect/closed_form.hpp"
#include "diskinspect/geometry.hpp"

namespace diskinspect {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Barrier schedule and termination (see header for the formulation).
constexpr double kMuStart = 1e-2;
constexpr double kMuFinal = 1e-8;
constexpr double kMuFactor = 0.1;
constexpr double kPgTol = 1e-9;
constexpr double kStallRelTol = 1e-12;
constexpr int kStallIters = 5;
constexpr double kSolverTol = 1e-6;  // converged iff kkt_residual <= this
constexpr int kLbfgsMemory = 25;
constexpr double kArmijo = 1e-4;
constexpr double kWolfe = 0.9;

struct Eval {
    double worst = 0.0;
    double avg = 0.0;
    std::vector<double> grad_worst;  // d/d(theta, t_1..t_k)
    std::vector<double> grad_avg;
};

// Worst/average costs of the poly-segment trajectory and their exact
// gradients, in one pass over the segments.
Eval eval_costs(const NlpProblem& p, double theta, const std::vector<double>& t) {
    if (static_cast<int>(t.size()) != p.k)
        throw std::invalid_argument("eval_costs: t must have k entries");
    const double cth = std::cos(theta);
    if (std::abs(cth) < 1e-12)
        throw std::domain_error("eval_costs: theta at the +-pi/2 singularity");

    const int k = p.k;
    const int n = k + 1;
    Eval ev;
    ev.grad_worst.assign(n, 0.0);
    ev.grad_avg.assign(n, 0.0);

    const double step = (p.c - 2.0 * theta) / k;

    // A_0 and its theta-derivative
    double ax_prev = 1.0, ay_prev = std::tan(theta);
    double dax_prev = 0.0, day_prev = 1.0 / (cth * cth);
    double dprevx_dt = 0.0, dprevy_dt = 0.0;  // d A_{i-1} / d t_{i-1}

    double sum_len = 0.0, sum_wlen = 0.0;
    double dth_len = 0.0, dth_wlen = 0.0;

    for (int i = 1; i <= k; ++i) {
        const double phi = 2.0 * theta + step * i;
        const double cp = std::cos(phi), sp = std::sin(phi);
        const double ti = t[static_cast<std::size_t>(i) - 1];
        const double ax = cp + ti * sp, ay = sp - ti * cp;
        const double dphi = 2.0 * (1.0 - static_cast<double>(i) / k);
        const double dax = dphi * (ti * cp - sp), day = dphi * (cp + ti * sp);

        const double ex = ax - ax_prev, ey = ay - ay_prev;
        const double len = std::hypot(ex, ey);
        const double w = static_cast<double>(k - i + 1) / (k + 1);

        if (len > 0.0) {
            const double ux = ex / len, uy = ey / len;
            const double dth = ux * (dax - dax_prev) + uy * (day - day_prev);
            const double dt_i = ux * sp - uy * cp;             // endpoint A_i
            const double dt_im1 = -(ux * dprevx_dt + uy * dprevy_dt);  // endpoint A_{i-1}

            dth_len += dth;
            dth_wlen += w * dth;
            ev.grad_worst[i] += dt_i;
            ev.grad_avg[i] += w * dt_i;
            if (i >= 2) {
                ev.grad_worst[i - 1] += dt_im1;
                ev.grad_avg[i - 1] += w * dt_im1;
            }
        }
        sum_len += len;
        sum_wlen += w * len;

        ax_prev = ax;
        ay_prev = ay;
        dax_prev = dax;
        day_prev = day;
        dprevx_dt = sp;
        dprevy_dt = -cp;
    }

    const double sec = 1.0 / cth;
    const double dsec = sec * std::tan(theta);
    ev.worst = sec + sum_len;
    ev.grad_worst[0] = dsec + dth_len;

    const double sth = std::sin(theta);
    const double log_term = std::log((1.0 + sth) / (1.0 - sth));
    const double dlog = 2.0 * sec;
    const double slack = 1.0 + 1.0 / k;
    const double weight = 1.0 - 2.0 * theta / p.c;
    const double inner = sec + sum_wlen;

    ev.avg = log_term / p.c + slack * weight * inner;
    ev.grad_avg[0] = dlog / p.c + slack * (-2.0 / p.c * inner + weight * (dsec + dth_wlen));
    for (int i = 1; i <= k; ++i) ev.grad_avg[i] *= slack * weight;
    return ev;
}

double combine(const NlpProblem& p, const Eval& ev, std::vector<double>& grad) {
    const int n = p.k + 1;
    grad.resize(n);
    if (p.lambda == 0.0) {
        grad = ev.grad_avg;
        return ev.avg;
    }
    if (p.lambda == 1.0) {
        grad = ev.grad_worst;
        return ev.worst;
    }
    for (int i = 0; i < n; ++i)
        grad[i] = p.lambda * ev.grad_worst[i] + (1.0 - p.lambda) * ev.grad_avg[i];
    return p.lambda * ev.worst + (1.0 - p.lambda) * ev.avg;
}

// L-BFGS two-loop recursion over stored (s, y) pairs.
class LbfgsMemoryBuf {
  public:
    explicit LbfgsMemoryBuf(int n) : n_(n) {}

    void clear() { pairs_.clear(); }

    void push(const std::vector<double>& s, const std::vector<double>& y) {
        double sy = 0.0, yy = 0.0, ss = 0.0;
        for (int i = 0; i < n_; ++i) {
            sy += s[i] * y[i];
            yy += y[i] * y[i];
            ss += s[i] * s[i];
        }
        if (!(sy > 1e-12 * std::sqrt(ss * yy)) || !(yy > 0.0)) return;  // skip flat pairs
        pairs_.push_back({s, y, sy});
        if (static_cast<int>(pairs_.size()) > kLbfgsMemory) pairs_.pop_front();
    }

    // d = -H g
    void direction(const std::vector<double>& g, std::vector<double>& d) const {
        d.assign(g.begin(), g.end());
        if (pairs_.empty()) {
            for (double& v : d) v = -v;
            return;
        }
        std::vector<double> alpha(pairs_.size());
        for (int j = static_cast<int>(pairs_.size()) - 1; j >= 0; --j) {
            const auto& pr = pairs_[j];
            double sd = 0.0;
            for (int i = 0; i < n_; ++i) sd += pr.s[i] * d[i];
            alpha[j] = sd / pr.sy;
            for (int i = 0; i < n_; ++i) d[i] -= alpha[j] * pr.y[i];
        }
        const auto& last = pairs_.back();
        double yy = 0.0;
        for (int i = 0; i < n_; ++i) yy += last.y[i] * last.y[i];
        const double gamma = last.sy / yy;
        for (double& v : d) v *= gamma;
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            const auto& pr = pairs_[j];
            double yd = 0.0;
            for (int i = 0; i < n_; ++i) yd += pr.y[i] * d[i];
            const double beta = yd / pr.sy;
            for (int i = 0; i < n_; ++i) d[i] += (alpha[j] - beta) * pr.s[i];
        }
        for (double& v : d) v = -v;
    }

  private:
    struct Pair {
        std::vector<double> s, y;
        double sy;
    };
    int n_;
    std::deque<Pair> pairs_;
};

// Exact minimizer over the waypoint parameters with theta held fixed.
//
// With theta fixed each segment length is a convex function of its two
// endpoint parameters (distance between points moving affinely), so the
// u-subproblem is convex with a tridiagonal Hessian:
//   d2l/dt_b2      = (1 - gb^2)/l,     gb = (E . D_b)/l
//   d2l/dt_a2      = (1 - ga^2)/l,     ga = (E . D_a)/l
//   d2l/dt_a dt_b  = (ga gb - D_a.D_b)/l
// Projected Newton with a Thomas solve is exact in a handful of O(k)
// iterations, including the bound-active cases that dominate at
// lambda = 1.
class WaypointNewton {
  public:
    WaypointNewton(const NlpProblem& p, double theta) : p_(p), k_(p.k) {
        const double step = (p.c - 2.0 * theta) / k_;
        const double slack = 1.0 + 1.0 / k_;
        const double weight = 1.0 - 2.0 * theta / p.c;
        dirx_.resize(k_ + 1);
        diry_.resize(k_ + 1);
        px_.resize(k_ + 1);
        py_.resize(k_ + 1);
        coef_.resize(k_ + 1);
        px_[0] = 1.0;
        py_[0] = std::tan(theta);
        dirx_[0] = diry_[0] = 0.0;  // A_0 does not move with u
        for (int i = 1; i <= k_; ++i) {
            const double phi = 2.0 * theta + step * i;
            px_[i] = std::cos(phi);
            py_[i] = std::sin(phi);
            dirx_[i] = py_[i];
            diry_[i] = -px_[i];
            const double w = static_cast<double>(k_ - i + 1) / (k_ + 1);
            coef_[i] = p.lambda + (1.0 - p.lambda) * slack * weight * w;
        }
    }

    // Gradient and tridiagonal Hessian of the u-dependent objective part.
    void grad_hess(const std::vector<double>& t, std::vector<double>& grad,
                   std::vector<double>& diag, std::vector<double>& off) const {
        grad.assign(k_, 0.0);
        diag.assign(k_, 0.0);
        off.assign(k_ > 1 ? k_ - 1 : 0, 0.0);
        double ax = px_[0], ay = py_[0];
        for (int i = 1; i <= k_; ++i) {
            const double bx = px_[i] + t[i - 1] * dirx_[i];
            const double by = py_[i] + t[i - 1] * diry_[i];
            const double ex = bx - ax, ey = by - ay;
            const double len = std::hypot(ex, ey);
            if (len > 1e-14) {
                const double gb = (ex * dirx_[i] + ey * diry_[i]) / len;
                grad[i - 1] += coef_[i] * gb;
                diag[i - 1] += coef_[i] * (1.0 - gb * gb) / len;
                if (i >= 2) {
                    const double ga = (ex * dirx_[i - 1] + ey * diry_[i - 1]) / len;
                    const double dab = dirx_[i - 1] * dirx_[i] + diry_[i - 1] * diry_[i];
                    grad[i - 2] -= coef_[i] * ga;
                    diag[i - 2] += coef_[i] * (1.0 - ga * ga) / len;
                    off[i - 2] += coef_[i] * (ga * gb - dab) / len;
                }
            }
            ax = bx;
            ay = by;
        }
    }

    double value(const std::vector<double>& t) const {
        double sum = 0.0;
        double ax = px_[0], ay = py_[0];
        for (int i = 1; i <= k_; ++i) {
            const double bx = px_[i] + t[i - 1] * dirx_[i];
            const double by = py_[i] + t[i - 1] * diry_[i];
            sum += coef_[i] * std::hypot(bx - ax, by - ay);
            ax = bx;
            ay = by;
        }
        return sum;
    }

    // Minimizes over u >= 0 (t = u + tau) in place; returns the final
    // projected-gradient norm and adds its iteration count to `iters`.
    double minimize(std::vector<double>& u, double tau, double tol, int max_iters,
                    int& iters) const {
        std::vector<double> t(k_), grad, diag, off, rhs(k_), delta(k_), cp(k_), u_new(k_),
            t_new(k_);
        for (int it = 0; it < max_iters; ++it) {
            for (int i = 0; i < k_; ++i) t[i] = u[i] + tau;
            grad_hess(t, grad, diag, off);
            double pg = 0.0;
            for (int i = 0; i < k_; ++i) {
                const double step = std::max(u[i] - grad[i], 0.0) - u[i];
                pg = std::max(pg, std::abs(step));
            }
            if (pg <= tol) return pg;
            ++iters;

            // Reduced Newton system: rows with an active lower bound are
            // pinned (unit diagonal, zero rhs/couplings).
            std::vector<bool> active(k_);
            for (int i = 0; i < k_; ++i) active[i] = u[i] <= 0.0 && grad[i] > 0.0;
            std::vector<double> a(diag), b(off);
            for (int i = 0; i < k_; ++i) {
                a[i] += 1e-12;  // keep the factorization definite on flats
                rhs[i] = active[i] ? 0.0 : -grad[i];
                if (active[i]) a[i] = 1.0;
            }
            for (int i = 0; i + 1 < k_; ++i)
                if (active[i] || active[i + 1]) b[i] = 0.0;

            // Thomas algorithm
            cp[0] = b.empty() ? 0.0 : b[0] / a[0];
            delta[0] = rhs[0] / a[0];
            for (int i = 1; i < k_; ++i) {
                const double m = a[i] - (i - 1 < static_cast<int>(b.size()) ? b[i - 1] * cp[i - 1] : 0.0);
                cp[i] = i < static_cast<int>(b.size()) ? b[i] / m : 0.0;
                delta[i] = (rhs[i] - (i - 1 < static_cast<int>(b.size()) ? b[i - 1] * delta[i - 1] : 0.0)) / m;
            }
            for (int i = k_ - 2; i >= 0; --i) delta[i] -= cp[i] * delta[i + 1];

            double gd = 0.0;
            for (int i = 0; i < k_; ++i) gd += grad[i] * delta[i];
            if (!(gd < 0.0)) {
                for (int i = 0; i < k_; ++i) delta[i] = active[i] ? 0.0 : -grad[i];
                gd = 0.0;
                for (int i = 0; i < k_; ++i) gd += grad[i] * delta[i];
                if (!(gd < 0.0)) return pg;
            }

            const double f0 = value(t);
            double alpha = 1.0;
            bool ok = false;
            for (int ls = 0; ls < 40; ++ls) {
                for (int i = 0; i < k_; ++i) {
                    u_new[i] = std::max(u[i] + alpha * delta[i], 0.0);
                    t_new[i] = u_new[i] + tau;
                }
                if (value(t_new) <= f0 + kArmijo * alpha * gd) {
                    ok = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!ok) return pg;
            u.swap(u_new);
        }
        for (int i = 0; i < k_; ++i) t[i] = u[i] + tau;
        grad_hess(t, grad, diag, off);
        double pg = 0.0;
        for (int i = 0; i < k_; ++i)
            pg = std::max(pg, std::abs(std::max(u[i] - grad[i], 0.0) - u[i]));
        return pg;
    }

  private:
    const NlpProblem& p_;
    int k_;
    std::vector<double> px_, py_, dirx_, diry_, coef_;
};

// State of a barrier solve over z = (theta, u_1..u_k).
struct BarrierProblem {
    const NlpProblem& p;
    double mu = 0.0;

    double dthreshold(double theta) const {
        const double half = (p.c - 2.0 * theta) / (2.0 * p.k);
        const double c = std::cos(half);
        return -1.0 / (p.k * c * c);
    }

    void to_t(const std::vector<double>& z, std::vector<double>& t) const {
        const double tau = p.threshold(z[0]);
        t.resize(p.k);
        for (int i = 0; i < p.k; ++i) t[i] = z[i + 1] + tau;
    }

    double value_grad(const std::vector<double>& z, std::vector<double>& g,
                      std::vector<double>& t_scratch) const {
        to_t(z, t_scratch);
        double f = objective_and_gradient(p, z[0], t_scratch, g);
        const double dtau = dthreshold(z[0]);
        double chain = 0.0;
        for (int i = 1; i <= p.k; ++i) chain += g[i];
        g[0] += chain * dtau;
        if (mu > 0.0) {
            // Damped log barrier: the bare -mu log(u) pulls u upward
            // without bound wherever the objective's u-sensitivity is
            // weak (late waypoints carry a 1/k average weight), which can
            // balloon the early stages into a spurious basin. The linear
            // term keeps the pull centered at u = 1.
            for (int i = 1; i <= p.k; ++i) {
                f -= mu * (std::log(z[i]) - z[i]);
                g[i] -= mu * (1.0 / z[i] - 1.0);
            }
        }
        return f;
    }
};

// sup-norm of P(z - g) - z over the box {theta in [0, theta_max], u >= 0};
// the u bounds only bind on the mu = 0 polish stage.
double projected_gradient_norm(const std::vector<double>& z, const std::vector<double>& g,
                               double theta_max, bool u_bounded) {
    double nrm = std::abs(std::clamp(z[0] - g[0], 0.0, theta_max) - z[0]);
    for (std::size_t i = 1; i < z.size(); ++i) {
        const double step = u_bounded ? std::max(z[i] - g[i], 0.0) - z[i] : -g[i];
        nrm = std::max(nrm, std::abs(step));
    }
    return nrm;
}

}  // namespace

double NlpProblem::theta_max() const {
    return std::min((1.0 - eps) * c / 2.0, kPi / 2.0 - eps);
}

double NlpProblem::threshold(double theta) const {
    return std::tan((c - 2.0 * theta) / (2.0 * k));
}

double objective_and_gradient(const NlpProblem& p, double theta, const std::vector<double>& t,
                              std::vector<double>& grad) {
    return combine(p, eval_costs(p, theta, t), grad);
}

void cost_components(const NlpProblem& p, double theta, const std::vector<double>& t,
                     double& worst, double& avg) {
    const Eval ev = eval_costs(p, theta, t);
    worst = ev.worst;
    avg = ev.avg;
}

SolveReport solve(const NlpProblem& p, std::optional<std::pair<double, std::vector<double>>> init) {
    if (p.k < 5) throw std::domain_error("solve: k must be at least 5");
    if (!(p.c > 0.0 && p.c <= kTwoPi)) throw std::domain_error("solve: c outside (0, 2pi]");
    if (!(p.eps > 0.0)) throw std::domain_error("solve: eps must be positive");
    if (!(p.lambda >= 0.0 && p.lambda <= 1.0)) throw std::domain_error("solve: lambda outside [0, 1]");

    const int n = p.k + 1;
    const double theta_max = p.theta_max();
    const int iter_cap = 50 * n;

    std::vector<double> z(n);
    if (init) {
        z[0] = std::clamp(init->first, 0.0, theta_max);
        if (static_cast<int>(init->second.size()) != p.k)
            throw std::invalid_argument("solve: init t must have k entries");
        const double tau = p.threshold(z[0]);
        for (int i = 0; i < p.k; ++i) z[i + 1] = std::max(init->second[i] - tau, 1e-8);
    } else {
        z[0] = std::min(kPi / 6.0, theta_max);
        for (int i = 1; i < n; ++i) z[i] = 0.5;
    }

    BarrierProblem bp{p, kMuStart};
    LbfgsMemoryBuf mem(n);
    std::vector<double> g(n), gm(n), d(n), z_new(n), g_new(n), s(n), y(n), t_scratch;

    int iterations = 0;
    double pg = kInf;
    bool budget_left = true;

    // One L-BFGS stage at barrier weight mu. fix_theta freezes the theta
    // coordinate (used by the block-coordinate polish rounds). Returns
    // with `pg` holding the full-space projected-gradient norm.
    auto run_stage = [&](double mu, bool fix_theta, double tol) {
        bp.mu = mu;
        const bool bounded_u = mu == 0.0;
        mem.clear();
        double f = bp.value_grad(z, g, t_scratch);
        int stall = 0;
        int restarts_left = 3;

        while (true) {
            pg = projected_gradient_norm(z, g, theta_max, bounded_u);
            double stage_pg = pg;
            if (fix_theta) {
                stage_pg = 0.0;
                for (int i = 1; i < n; ++i) {
                    const double step = bounded_u ? std::max(z[i] - g[i], 0.0) - z[i] : -g[i];
                    stage_pg = std::max(stage_pg, std::abs(step));
                }
            }
            if (stage_pg <= tol) break;
            if (stall >= kStallIters) {
                // A plateau under L-BFGS often reflects stale curvature
                // pairs rather than stationarity; restart the metric.
                if (restarts_left == 0) break;
                --restarts_left;
                mem.clear();
                stall = 0;
            }
            if (iterations >= iter_cap) {
                budget_left = false;
                break;
            }

            // Mask components whose bound (or freeze) blocks descent.
            gm = g;
            if (fix_theta || (z[0] <= 0.0 && gm[0] > 0.0) || (z[0] >= theta_max && gm[0] < 0.0))
                gm[0] = 0.0;
            if (bounded_u)
                for (int i = 1; i < n; ++i)
                    if (z[i] <= 0.0 && gm[i] > 0.0) gm[i] = 0.0;
            mem.direction(gm, d);
            if (fix_theta) d[0] = 0.0;
            double gd = 0.0;
            for (int i = 0; i < n; ++i) gd += gm[i] * d[i];
            if (!(gd < 0.0)) {  // not a descent direction; restart from steepest descent
                mem.clear();
                for (int i = 0; i < n; ++i) d[i] = -gm[i];
                gd = 0.0;
                for (int i = 0; i < n; ++i) gd += gm[i] * d[i];
                if (!(gd < 0.0)) break;  // stationary under the mask
            }

            double alpha_cap = kInf;
            if (!bounded_u) {
                // Keep u strictly positive while the barrier is active.
                for (int i = 1; i < n; ++i)
                    if (d[i] < 0.0) alpha_cap = std::min(alpha_cap, -0.995 * z[i] / d[i]);
            }

            auto take_step = [&](double a) {
                z_new[0] = std::clamp(z[0] + a * d[0], 0.0, theta_max);
                for (int i = 1; i < n; ++i) {
                    z_new[i] = z[i] + a * d[i];
                    if (bounded_u && z_new[i] < 0.0) z_new[i] = 0.0;
                }
                return bp.value_grad(z_new, g_new, t_scratch);
            };

            double alpha = std::min(1.0, alpha_cap);
            double f_new = kInf;
            bool accepted = false;
            for (int ls = 0; ls < 60; ++ls) {
                f_new = take_step(alpha);
                if (std::isfinite(f_new) && f_new <= f + kArmijo * alpha * gd) {
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (accepted && alpha == std::min(1.0, alpha_cap)) {
                // Weak Wolfe: expand while the slope is still strongly negative.
                for (int ex = 0; ex < 10; ++ex) {
                    double gd_new = 0.0;
                    for (int i = 0; i < n; ++i) gd_new += g_new[i] * d[i];
                    if (gd_new >= kWolfe * gd) break;
                    const double alpha_try = std::min(2.0 * alpha, alpha_cap);
                    if (alpha_try <= alpha) break;
                    const double f_try = take_step(alpha_try);
                    if (!std::isfinite(f_try) || f_try > f + kArmijo * alpha_try * gd) {
                        f_new = take_step(alpha);  // recompute the accepted point
                        break;
                    }
                    alpha = alpha_try;
                    f_new = f_try;
                }
            }
            ++iterations;
            if (!accepted) break;  // no further progress at machine precision

            for (int i = 0; i < n; ++i) {
                s[i] = z_new[i] - z[i];
                y[i] = g_new[i] - g[i];
            }
            mem.push(s, y);

            const double drop = f - f_new;
            stall = drop <= kStallRelTol * std::max(1.0, std::abs(f)) ? stall + 1 : 0;
            z.swap(z_new);
            g.swap(g_new);
            f = f_new;
        }
    };

    // Barrier continuation down to kMuFinal: the globalization phase that
    // settles the basin (theta regime, active set pattern). Warm starts
    // skip the strong-barrier stages: the iterate is already near a
    // solution of the neighboring problem.
    std::vector<double> schedule;
    const double mu_start = init ? 1e-5 : kMuStart;
    for (double mu = mu_start; mu >= kMuFinal * 0.999; mu *= kMuFactor) schedule.push_back(mu);
    for (double mu : schedule) {
        if (!budget_left) break;
        run_stage(mu, false, std::max(kPgTol, 0.1 * mu));
    }

    // Exact polish. With theta fixed the waypoint subproblem is convex
    // with a tridiagonal Newton solve; the remaining scalar theta is
    // minimized through its value function W(theta) = min_u F(theta, u),
    // whose derivative is the partial F_theta at the inner minimizer.
    std::vector<double> u(p.k);
    auto value_derivative = [&](double th) {
        const WaypointNewton sub(p, th);
        const double tau = p.threshold(th);
        sub.minimize(u, tau, 1e-11, 80, iterations);
        z[0] = th;
        for (int i = 0; i < p.k; ++i) z[i + 1] = u[i];
        bp.mu = 0.0;
        bp.value_grad(z, g, t_scratch);
        return g[0];
    };
    if (budget_left) {
        for (int i = 0; i < p.k; ++i) u[i] = z[i + 1];
        const double g0 = value_derivative(z[0]);
        if (g0 != 0.0) {
            const double dir = g0 > 0.0 ? -1.0 : 1.0;
            double lo = z[0], hi = z[0];
            double h = 1e-4;
            bool bracketed = false;
            for (int it = 0; it < 60; ++it) {
                const double cand = std::clamp(lo + dir * h, 0.0, theta_max);
                if (value_derivative(cand) * g0 < 0.0) {
                    hi = cand;
                    bracketed = true;
                    break;
                }
                lo = cand;
                if (cand <= 0.0 || cand >= theta_max) break;  // one-signed up to the box
                h *= 2.0;
            }
            if (bracketed) {
                for (int it = 0; it < 90; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid == lo || mid == hi) break;
                    if (value_derivative(mid) * g0 > 0.0)
                        lo = mid;
                    else
                        hi = mid;
                }
                value_derivative(0.5 * (lo + hi));
            } else {
                value_derivative(lo);
            }
        }
        pg = projected_gradient_norm(z, g, theta_max, true);
    }

    SolveReport rep;
    rep.theta = z[0];
    bp.to_t(z, rep.t);
    std::vector<double> grad;
    const Eval ev = eval_costs(p, rep.theta, rep.t);
    rep.worst = ev.worst;
    rep.avg = ev.avg;
    rep.objective = combine(p, ev, grad);
    rep.iterations = iterations;
    rep.kkt_residual = pg;  // bound-aware projected gradient after the polish stage
    rep.converged = budget_left && rep.kkt_residual <= kSolverTol;
    return rep;
}

namespace {

int sweep_thread_count(std::size_t grid_size) {
    int n = 1;
    if (const char* env = std::getenv("DISKINSPECT_THREADS")) {
        n = std::max(1, std::atoi(env));
        n = std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency() > 0
                                                  ? std::thread::hardware_concurrency()
                                                  : 1));
    }
    return std::min<int>(n, static_cast<int>(grid_size));
}

// Runs one contiguous block of grid points, warm-starting each solve from
// the previous point in the block.
template <typename MakeProblem, typename FillRow>
void run_block(const std::vector<double>& grid, std::size_t lo, std::size_t hi,
               std::vector<SweepRow>& rows, MakeProblem make_problem, FillRow fill_row) {
    std::optional<std::pair<double, std::vector<double>>> warm;
    for (std::size_t i = lo; i < hi; ++i) {
        SweepRow row;
        row.grid = grid[i];
        try {
            const NlpProblem prob = make_problem(grid[i]);
            const SolveReport rep = solve(prob, warm);
            warm = std::make_pair(rep.theta, rep.t);
            fill_row(row, rep);
        } catch (const std::exception&) {
            row.objective = row.worst = row.avg = row.theta =
                std::numeric_limits<double>::quiet_NaN();
            row.converged = false;
            row.regime = "error";
        }
        rows[i] = std::move(row);
    }
}

template <typename MakeProblem, typename FillRow>
std::vector<SweepRow> run_sweep(const std::vector<double>& grid, MakeProblem make_problem,
                                FillRow fill_row) {
    std::vector<SweepRow> rows(grid.size());
    const int nthreads = sweep_thread_count(grid.size());
    if (nthreads <= 1) {
        run_block(grid, 0, grid.size(), rows, make_problem, fill_row);
        return rows;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (grid.size() + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(grid.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] { run_block(grid, lo, hi, rows, make_problem, fill_row); });
    }
    for (auto& th : workers) th.join();
    return rows;
}

}  // namespace

std::vector<SweepRow> sweep_partial(const std::vector<double>& c_grid, int k, double eps) {
    for (double c : c_grid)
        if (!(c > 0.0 && c <= kTwoPi)) throw std::domain_error("sweep_partial: c outside (0, 2pi]");

    auto make_problem = [k, eps](double c) { return NlpProblem{k, c, eps, 0.0}; };
    auto fill_row = [](SweepRow& row, const SolveReport& rep) {
        row.objective = rep.objective;
        row.worst = rep.worst;
        row.avg = rep.avg;
        row.theta = rep.theta;
        row.kkt_residual = rep.kkt_residual;
        row.converged = rep.converged;
        row.regime = "nlp";
        // The radial closed form (theta = c/2 exactly) beats the
        // eps-constrained program for small c; report the better bound.
        if (row.grid < kPi) {
            const double rad = radial_avg_cost(row.grid);
            if (rad <= row.objective || !row.converged) {
                row.objective = rad;
                row.avg = rad;
                row.worst = 1.0 / std::cos(row.grid / 2.0);
                row.theta = row.grid / 2.0;
                row.kkt_residual = 0.0;
                row.converged = true;
                row.regime = "radial";
            }
        }
    };
    return run_sweep(c_grid, make_problem, fill_row);
}

std::vector<SweepRow> sweep_pareto(const std::vector<double>& lambda_grid, int k, double eps) {
    for (double l : lambda_grid)
        if (!(l >= 0.0 && l <= 1.0)) throw std::domain_error("sweep_pareto: lambda outside [0, 1]");

    auto make_problem = [k, eps](double lambda) { return NlpProblem{k, kTwoPi, eps, lambda}; };
    auto fill_row = [](SweepRow& row, const SolveReport& rep) {
        row.objective = rep.objective;
        row.worst = rep.worst;
        row.avg = rep.avg;
        row.theta = rep.theta;
        row.kkt_residual = rep.kkt_residual;
        row.converged = rep.converged;
        row.regime = "nlp";
    };
    return run_sweep(lambda_grid, make_problem, fill_row);
}

}  // namespace diskinspect
