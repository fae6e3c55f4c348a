#ifndef CHEMFRONT_FRONT_HPP
#define CHEMFRONT_FRONT_HPP

/**
 * @file front.hpp
 * @brief Front positions, propagation speeds, decay rates and the
 *        theorem-specific diagnostics extracted from trajectories.
 *
 * Level crossings are located by linear interpolation between the bracketing
 * nodes (sub-grid accuracy for smooth profiles). Speeds are ordinary
 * least-squares slopes over a late time window, reported together with the
 * window and a standard error: all the limits being probed are t -> infinity
 * statements, so finite-horizon results are never reported without their fit
 * window.
 */

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chemfront/kernel.hpp"
#include "chemfront/solver.hpp"

namespace chemfront {

struct FrontSample {
    double t;
    double left;   ///< smallest x with u >= theta
    double right;  ///< largest x with u >= theta
    bool left_clipped;
    bool right_clipped;
};

struct FrontTrace {
    double theta;
    std::vector<FrontSample> samples;
    int omitted = 0;  ///< snapshots whose level set was empty
};

enum class FrontSide { Left, Right };

struct SpeedEstimate {
    double c_hat;
    double stderr_;
    double window_lo;
    double window_hi;
    int n_points;
};

struct SpreadingInterval {
    double c_minus;  ///< largest tested c with inf over |x|<=ct of u >= theta
    double c_plus;   ///< smallest tested c with sup over |x|>=ct of u < theta
    bool grid_edge_hit;  ///< an endpoint saturated the tested speed grid
};

struct DecayFit {
    double kappa_hat;
    double x_lo;
    double x_hi;
    double max_residual;  ///< worst log-linear fit residual
    int n_points;
};

/// Level-crossing positions over time at density threshold theta.
inline FrontTrace track_level(const Trajectory& traj, double theta) {
    const ModelParams& p = traj.params;
    if (!(theta > 0.0) || !(theta < p.carrying_capacity()))
        throw std::invalid_argument("track_level: theta must lie in (0, a/b)");
    FrontTrace trace;
    trace.theta = theta;
    for (const State& s : traj.snapshots) {
        const Grid& g = s.u.grid;
        const double buf = boundary_buffer(p);
        const double lo_x = -g.half_length + buf;
        const double hi_x = g.half_length - buf;
        const int n = g.n_cells;

        int right_idx = -1;
        for (int i = n; i >= 0; --i)
            if (s.u[i] >= theta) { right_idx = i; break; }
        if (right_idx < 0) {
            ++trace.omitted;
            continue;
        }
        int left_idx = -1;
        for (int i = 0; i <= n; ++i)
            if (s.u[i] >= theta) { left_idx = i; break; }

        FrontSample smp{};
        smp.t = s.t;
        if (right_idx == n) {
            smp.right = hi_x;
            smp.right_clipped = true;
        } else {
            const double den = s.u[right_idx] - s.u[right_idx + 1];
            smp.right = g.x(right_idx) + g.spacing * (s.u[right_idx] - theta) / den;
            smp.right_clipped = smp.right > hi_x;
            if (smp.right_clipped) smp.right = hi_x;
        }
        if (left_idx == 0) {
            smp.left = lo_x;
            smp.left_clipped = true;
        } else {
            const double den = s.u[left_idx] - s.u[left_idx - 1];
            smp.left = g.x(left_idx) - g.spacing * (s.u[left_idx] - theta) / den;
            smp.left_clipped = smp.left < lo_x;
            if (smp.left_clipped) smp.left = lo_x;
        }
        trace.samples.push_back(smp);
    }
    return trace;
}

/// Least-squares slope of position vs time over [window_lo, window_hi];
/// defaults to the last half of the trace. Requires >= 10 unclipped samples.
inline SpeedEstimate estimate_speed(const FrontTrace& trace, FrontSide side,
                                    double window_lo = std::nan(""),
                                    double window_hi = std::nan("")) {
    if (trace.samples.empty())
        throw std::invalid_argument("estimate_speed: empty trace");
    const double t0 = trace.samples.front().t;
    const double t1 = trace.samples.back().t;
    if (std::isnan(window_lo)) window_lo = t0 + 0.5 * (t1 - t0);
    if (std::isnan(window_hi)) window_hi = t1;
    if (!(window_lo < window_hi))
        throw std::invalid_argument("estimate_speed: bad window");

    std::vector<double> ts, xs;
    for (const FrontSample& s : trace.samples) {
        if (s.t < window_lo || s.t > window_hi) continue;
        const bool clipped = (side == FrontSide::Right) ? s.right_clipped : s.left_clipped;
        if (clipped) continue;
        ts.push_back(s.t);
        xs.push_back(side == FrontSide::Right ? s.right : s.left);
    }
    const int n = static_cast<int>(ts.size());
    if (n < 10)
        throw std::invalid_argument("estimate_speed: fewer than 10 samples in window");

    double tm = 0.0, xm = 0.0;
    for (int i = 0; i < n; ++i) { tm += ts[i]; xm += xs[i]; }
    tm /= n;
    xm /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (ts[i] - tm) * (ts[i] - tm);
        sxy += (ts[i] - tm) * (xs[i] - xm);
    }
    const double slope = sxy / sxx;
    const double intercept = xm - slope * tm;
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = xs[i] - (intercept + slope * ts[i]);
        rss += r * r;
    }
    const double sigma2 = rss / std::max(1, n - 2);
    return SpeedEstimate{slope, std::sqrt(sigma2 / sxx), window_lo, window_hi, n};
}

/// Empirical bracket of the spreading-speed interval at the final recorded
/// time: c_minus from inf over |x|<=ct, c_plus from sup over |x|>=ct, both
/// against the threshold theta, scanned over c in [c_lo, c_hi] with step dc.
inline SpreadingInterval spreading_interval(const Trajectory& traj, double c_lo,
                                            double c_hi, double dc, double theta) {
    if (!(c_lo > 0.0) || !(c_hi > c_lo) || !(dc > 0.0))
        throw std::invalid_argument("spreading_interval: bad speed grid");
    const State& s = traj.back();
    const double t = s.t;
    if (!(t > 0.0)) throw std::invalid_argument("spreading_interval: needs t > 0");
    const Grid& g = s.u.grid;
    const double buf = boundary_buffer(traj.params);
    const double x_max = g.half_length - buf;

    auto inf_inside = [&](double radius) {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < s.u.size(); ++i) {
            const double ax = std::abs(g.x(i));
            if (ax <= radius && ax <= x_max) m = std::min(m, s.u[i]);
        }
        return m;
    };
    auto sup_outside = [&](double radius) {
        double m = 0.0;
        for (int i = 0; i < s.u.size(); ++i) {
            const double ax = std::abs(g.x(i));
            if (ax >= radius && ax <= x_max) m = std::max(m, s.u[i]);
        }
        return m;
    };

    if (inf_inside(c_lo * t) < theta)
        throw std::runtime_error(
            "spreading_interval: u < theta already at the smallest tested speed "
            "(dead or still-transient run)");

    SpreadingInterval out{};
    out.c_minus = c_lo;
    for (double c = c_lo; c <= c_hi + 1e-12; c += dc) {
        if (inf_inside(c * t) >= theta)
            out.c_minus = c;
        else
            break;
    }
    out.c_plus = c_hi;
    bool found_plus = false;
    for (double c = c_lo; c <= c_hi + 1e-12; c += dc) {
        if (sup_outside(c * t) < theta) {
            out.c_plus = c;
            found_plus = true;
            break;
        }
    }
    out.grid_edge_hit = !found_plus || out.c_minus >= c_hi - 1e-12;
    return out;
}

/// max |u - a/b| over {|x| <= c t} at the last snapshot with t <= t_eval
/// (the final snapshot by default). Requires c below 2 sqrt(a).
inline double behind_front_deviation(const Trajectory& traj, double c,
                                     const ModelParams& p,
                                     double t_eval = std::numeric_limits<double>::infinity()) {
    if (!(c > 0.0) || !(c < 2.0 * std::sqrt(p.a)))
        throw std::invalid_argument("behind_front_deviation: needs 0 < c < 2*sqrt(a)");
    const State* pick = nullptr;
    for (const State& s : traj.snapshots)
        if (s.t <= t_eval + 1e-12) pick = &s;
    if (!pick || !(pick->t > 0.0))
        throw std::invalid_argument("behind_front_deviation: no usable snapshot");
    const Grid& g = pick->u.grid;
    const double target = p.carrying_capacity();
    double worst = 0.0;
    for (int i = 0; i < pick->u.size(); ++i)
        if (std::abs(g.x(i)) <= c * pick->t)
            worst = std::max(worst, std::abs(pick->u[i] - target));
    return worst;
}

/// max over x >= (c_kappa + eps) t of |u / e^{-kappa(x - c_kappa t)} - 1| at
/// the final snapshot, restricted to where the envelope is at least
/// ratio_floor (below that the quotient is numerically meaningless).
inline double shape_ratio_ahead(const Trajectory& traj, double kappa,
                                const ModelParams& p, double eps,
                                double ratio_floor = 1e-8) {
    if (!(kappa > 0.0) || !(kappa < std::min(std::sqrt(p.a), std::sqrt(p.lambda))))
        throw std::invalid_argument(
            "shape_ratio_ahead: needs 0 < kappa < min(sqrt(a), sqrt(lambda))");
    if (!(p.b > 2.0 * p.chi * p.mu))
        throw std::invalid_argument("shape_ratio_ahead: needs b > 2*chi*mu");
    if (!(eps > 0.0)) throw std::invalid_argument("shape_ratio_ahead: eps must be > 0");

    const State& s = traj.back();
    const double t = s.t;
    const double ck = c_kappa(p, kappa);
    const Grid& g = s.u.grid;
    const double x_hi = g.half_length - boundary_buffer(p);
    double worst = -1.0;
    for (int i = 0; i < s.u.size(); ++i) {
        const double x = g.x(i);
        if (x < (ck + eps) * t || x > x_hi) continue;
        const double env = std::exp(-kappa * (x - ck * t));
        if (env < ratio_floor) continue;
        worst = std::max(worst, std::abs(s.u[i] / env - 1.0));
    }
    if (worst < 0.0)
        throw std::runtime_error("shape_ratio_ahead: evaluation window is empty");
    return worst;
}

/// Log-linear fit of the decay rate over {x : u(x) in [u_lo, u_hi]},
/// excluding the boundary strip of the given width.
inline DecayFit fit_decay(const ScalarField& field, double u_lo, double u_hi,
                          double buffer = 0.0) {
    if (!(u_lo > 0.0) || !(u_lo < u_hi))
        throw std::invalid_argument("fit_decay: need 0 < u_lo < u_hi");
    const Grid& g = field.grid;
    std::vector<double> xs, ls;
    for (int i = 0; i < field.size(); ++i) {
        const double x = g.x(i);
        if (x < -g.half_length + buffer || x > g.half_length - buffer) continue;
        if (field[i] < u_lo || field[i] > u_hi) continue;
        xs.push_back(x);
        ls.push_back(std::log(field[i]));
    }
    const int n = static_cast<int>(xs.size());
    if (n < 10) throw std::invalid_argument("fit_decay: fewer than 10 nodes in range");

    double lmin = ls[0], lmax = ls[0];
    for (double l : ls) { lmin = std::min(lmin, l); lmax = std::max(lmax, l); }
    if (lmax - lmin < 1e-12)
        throw std::invalid_argument("fit_decay: field has no decay in the fit range");

    double xm = 0.0, lm = 0.0;
    for (int i = 0; i < n; ++i) { xm += xs[i]; lm += ls[i]; }
    xm /= n;
    lm /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ls[i] - lm);
    }
    const double slope = sxy / sxx;
    const double intercept = lm - slope * xm;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(ls[i] - (intercept + slope * xs[i])));

    DecayFit fit{};
    fit.kappa_hat = -slope;
    fit.x_lo = xs.front();
    fit.x_hi = xs.back();
    fit.max_residual = worst;
    fit.n_points = n;
    return fit;
}

}  // namespace chemfront

#endif  // CHEMFRONT_FRONT_HPP
