#ifndef CHEMFRONT_WAVE_HPP
#define CHEMFRONT_WAVE_HPP

/**
 * @file wave.hpp
 * @brief Traveling-wave profiles by envelope-sandwiched fixed-point iteration.
 *
 * For a decay rate kappa in (0, min{sqrt(a), sqrt(lambda)}) the wave of speed
 * c_kappa = (kappa^2+a)/kappa is constructed by iterating the map
 *
 *     u  |->  steady state of  U_t = U_xx + (c_kappa - chi*Psi_x(x;u)) U_x
 *                                   + (a - chi*lambda*Psi(x;u) - (b-chi*mu) U) U,
 *
 * the coefficient fields Psi, Psi_x frozen per outer iterate and the
 * relaxation started from the upper envelope
 *
 *     U+(x) = min{a/(b-chi*mu), e^{-kappa x}},
 *
 * which makes the relaxation pointwise nonincreasing in time. Iterates stay
 * sandwiched between U+ and the lower envelope
 *
 *     U-(x) = max{0, e^{-kappa x} - D e^{-kappa_tilde x}},
 *
 * whose D is raised (doubling) until U- verifies as a discrete subsolution of
 * the frozen operator. The sandwich pins the translate: the right tail of the
 * converged profile satisfies U(x)/e^{-kappa x} -> 1.
 */

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chemfront/grid.hpp"
#include "chemfront/kernel.hpp"
#include "chemfront/theory.hpp"
#include "chemfront/tridiagonal.hpp"

namespace chemfront {

/// Midpoint of the admissible interval (kappa, min{2*kappa, sqrt(a), sqrt(lambda)}).
inline double default_kappa_tilde(const ModelParams& p, double kappa) {
    const double cap = std::min({2.0 * kappa, std::sqrt(p.a), std::sqrt(p.lambda)});
    return kappa + 0.5 * (cap - kappa);
}

struct WaveEnvelopes {
    double kappa = 0.0;
    double kappa_tilde = 0.0;
    double big_d = 1.0;
    double ceiling = 0.0;  ///< a/(b - chi*mu)

    double upper(double x) const { return std::min(ceiling, std::exp(-kappa * x)); }
    double lower(double x) const {
        return std::max(0.0, std::exp(-kappa * x) - big_d * std::exp(-kappa_tilde * x));
    }
    /// U- is positive exactly for x > ln(D)/(kappa_tilde - kappa).
    double support_edge() const { return std::log(big_d) / (kappa_tilde - kappa); }
};

inline WaveEnvelopes make_envelopes(const ModelParams& p, double kappa,
                                    double big_d = 1.0,
                                    double kappa_tilde = std::nan("")) {
    p.validate();
    if (!(p.chi * p.mu < p.b))
        throw std::invalid_argument("wave envelopes require chi*mu < b");
    if (!(kappa > 0.0)) throw std::invalid_argument("wave: kappa must be > 0");
    WaveEnvelopes e;
    e.kappa = kappa;
    e.kappa_tilde = std::isnan(kappa_tilde) ? default_kappa_tilde(p, kappa) : kappa_tilde;
    e.big_d = big_d;
    e.ceiling = p.a / (p.b - p.chi * p.mu);
    if (!(e.kappa_tilde > kappa) || !(e.kappa_tilde < 2.0 * kappa) ||
        !(big_d >= 1.0))
        throw std::invalid_argument(
            "wave: need kappa < kappa_tilde < min{2*kappa, sqrt(a), sqrt(lambda)} and D >= 1");
    return e;
}

struct FixedPointConfig {
    double steady_tol = 1e-8;     ///< sup|dU/dt| declaring the relaxation steady
    double fp_tol = 1e-6;         ///< sup gap between successive outer iterates
    int max_outer = 50;
    double relax_dt = 0.0;        ///< 0 = derive from the CFL limit
    double relax_t_max = 2000.0;  ///< relaxation horizon before giving up
    double check_interval = 1.0;  ///< time between steadiness/monotonicity checks
    double omega = 1.0;           ///< outer damping weight in (0,1]
    double cfl_safety = 0.9;
    double ratio_window_lo = 1e-8;  ///< right-tail fit window: envelope range
    double ratio_window_hi = 1e-2;
};

struct ProfileDiagnostics {
    double max_elliptic_residual = 0.0;
    double tail_ratio_max_dev = 0.0;
    double tail_window_x_lo = 0.0;
    double tail_window_x_hi = 0.0;
    double left_probe_x = 0.0;
    double left_value = 0.0;
    double envelope_margin = 0.0;  ///< max of (u - U+) and (U- - u); <= 0 means inside
};

struct WaveProfile {
    double kappa = 0.0;
    double speed = 0.0;
    ScalarField u;
    ScalarField v;
    ScalarField v_x;
    WaveEnvelopes envelopes;
    ProfileDiagnostics diag;
    int outer_iters = 0;
    double final_gap = 0.0;
    bool sensitive = false;  ///< solved at/near the degenerate boundary kappa
};

namespace wave_detail {

struct FrozenFields {
    ScalarField psi;
    ScalarField psi_x;
};

/// Frozen-coefficient operator A(U) at node i (centered second order).
inline double frozen_operator(const std::vector<double>& u, int i, const Grid& g,
                              const FrozenFields& f, double c, const ModelParams& p) {
    const double h = g.spacing;
    const double d2 = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h);
    const double d1 = (u[i + 1] - u[i - 1]) / (2.0 * h);
    const double drift = c - p.chi * f.psi_x[i];
    const double react = p.a - p.chi * p.lambda * f.psi[i] - (p.b - p.chi * p.mu) * u[i];
    return d2 + drift * d1 + react * u[i];
}

/// Checks A(U-) >= -tol at every interior node where U- > 0.
inline bool is_discrete_subsolution(const WaveEnvelopes& env, const Grid& g,
                                    const FrozenFields& f, double c,
                                    const ModelParams& p) {
    std::vector<double> low(g.n_nodes());
    for (int i = 0; i < g.n_nodes(); ++i) low[i] = env.lower(g.x(i));
    for (int i = 1; i < g.n_nodes() - 1; ++i) {
        if (low[i] <= 0.0) continue;
        const double val = frozen_operator(low, i, g, f, c, p);
        const double scale = 1.0 + std::abs(low[i]) * (p.a + p.chi * p.lambda * f.psi[i]);
        if (val < -1e-8 * scale) return false;
    }
    return true;
}

}  // namespace wave_detail

/// Relaxes the frozen-coefficient parabolic equation to its steady state,
/// starting from the upper envelope. The run is checked to be pointwise
/// nonincreasing in time (tolerance 1e-9) at every check interval; violation
/// or failure to reach steadiness within the horizon is an error. If `env`
/// is given, the input is clamped into [0, U+] (with a warning) and the
/// result is verified to stay above U-.
inline ScalarField relax_to_steady(const ScalarField& u_frozen, double kappa,
                                   const ModelParams& p, const FixedPointConfig& cfg,
                                   const WaveEnvelopes* env = nullptr,
                                   std::vector<std::string>* warnings = nullptr) {
    p.validate();
    if (!(p.chi * p.mu < p.b))
        throw std::invalid_argument("relax_to_steady requires chi*mu < b");
    const Grid& g = u_frozen.grid;
    const int n = g.n_cells;
    const double h = g.spacing;
    const double c = c_kappa(p, kappa);
    const double ceiling = p.a / (p.b - p.chi * p.mu);

    ScalarField frozen = u_frozen;
    if (env) {
        int clamped = 0;
        for (int i = 0; i <= n; ++i) {
            const double hi = env->upper(g.x(i));
            if (frozen[i] < 0.0 || frozen[i] > hi) {
                frozen[i] = std::min(std::max(frozen[i], 0.0), hi);
                ++clamped;
            }
        }
        if (clamped > 0 && warnings)
            warnings->push_back("relax_to_steady: clamped " + std::to_string(clamped) +
                                " nodes of the frozen field into the envelope");
    }

    wave_detail::FrozenFields f;
    {
        PsiPair k = psi_fast(frozen, p, TailPolicy::ConstantLeftZeroRight);
        f.psi = std::move(k.psi);
        f.psi_x = std::move(k.psi_x);
    }

    double drift_max = 0.0, psi_max = 0.0;
    for (int i = 0; i <= n; ++i) {
        drift_max = std::max(drift_max, std::abs(c - p.chi * f.psi_x[i]));
        psi_max = std::max(psi_max, f.psi[i]);
    }
    double dt = cfg.relax_dt;
    if (dt <= 0.0) {
        const double react_rate =
            p.a + p.chi * p.lambda * psi_max + 2.0 * (p.b - p.chi * p.mu) * ceiling;
        dt = cfg.cfl_safety * std::min(h / drift_max, 1.0 / react_rate);
    }

    // diffusion implicit: zero-flux on the left, tail value pinned on the right
    const double dirichlet = std::exp(-kappa * g.half_length);
    TridiagonalSolver diffusion;
    {
        const double r = dt / (h * h);
        std::vector<double> lo(n + 1, -r), di(n + 1, 1.0 + 2.0 * r), up(n + 1, -r);
        up[0] = -2.0 * r;
        lo[n] = 0.0;
        di[n] = 1.0;
        diffusion = TridiagonalSolver(std::move(lo), std::move(di), std::move(up));
    }

    std::vector<double> u(n + 1);
    for (int i = 0; i <= n; ++i)
        u[i] = std::min(ceiling, std::exp(-kappa * g.x(i)));  // U+
    std::vector<double> u_check = u;
    std::vector<double> rhs(n + 1);

    const long steps_per_check =
        std::max<long>(1, std::lround(cfg.check_interval / dt));
    const long max_steps = std::lround(cfg.relax_t_max / dt);
    const double bq = p.b - p.chi * p.mu;

    for (long k = 1; k <= max_steps; ++k) {
        rhs[0] = u[0] + dt * (p.a - p.chi * p.lambda * f.psi[0] - bq * u[0]) * u[0];
        for (int i = 1; i < n; ++i) {
            const double d1 = (u[i + 1] - u[i - 1]) / (2.0 * h);
            const double drift = c - p.chi * f.psi_x[i];
            const double react = p.a - p.chi * p.lambda * f.psi[i] - bq * u[i];
            rhs[i] = u[i] + dt * (drift * d1 + react * u[i]);
        }
        rhs[n] = dirichlet;
        diffusion.solve(rhs);
        u.swap(rhs);

        if (k % steps_per_check == 0 || k == max_steps) {
            double inc = -std::numeric_limits<double>::infinity();
            double gap = 0.0;
            for (int i = 0; i <= n; ++i) {
                inc = std::max(inc, u[i] - u_check[i]);
                gap = std::max(gap, std::abs(u[i] - u_check[i]));
            }
            if (inc > 1e-9) {
                std::ostringstream msg;
                msg << "relax_to_steady: non-monotone decrease (max increase " << inc
                    << " at t=" << k * dt << "); discretization too coarse";
                throw std::runtime_error(msg.str());
            }
            const double elapsed = steps_per_check * dt;
            if (gap / elapsed < cfg.steady_tol) {
                ScalarField out(g);
                out.values = std::move(u);
                if (env) {
                    for (int i = 0; i <= n; ++i)
                        if (env->lower(g.x(i)) - out[i] > 1e-7)
                            throw std::runtime_error(
                                "relax_to_steady: steady state fell below the lower "
                                "envelope");
                }
                return out;
            }
            u_check = u;
        }
    }
    throw std::runtime_error("relax_to_steady: no steady state within the horizon");
}

ProfileDiagnostics verify_profile(const WaveProfile& w, const ModelParams& p,
                                  const FixedPointConfig& cfg = {});

/// Iterates u_{n+1} = (1-omega) u_n + omega * relax(u_n) from u_0 = U+ until
/// the sup gap drops below fp_tol. The damping weight halves automatically
/// when the gap grows. Every iterate is kept inside [U-, U+].
inline WaveProfile fixed_point_wave(const Grid& g, double kappa, const ModelParams& p,
                                    const FixedPointConfig& cfg = {},
                                    bool allow_boundary_kappa = false,
                                    std::vector<std::string>* warnings = nullptr) {
    p.validate();
    if (!(p.chi * p.mu < p.b))
        throw std::invalid_argument("fixed_point_wave requires chi*mu < b");
    const double kappa_max = std::min(std::sqrt(p.a), std::sqrt(p.lambda));
    if (!(kappa > 0.0)) throw std::invalid_argument("fixed_point_wave: kappa must be > 0");
    bool sensitive = false;
    if (!(kappa < kappa_max)) {
        if (!allow_boundary_kappa || kappa > kappa_max * (1.0 + 1e-12))
            throw std::invalid_argument(
                "fixed_point_wave: needs 0 < kappa < min(sqrt(a), sqrt(lambda))");
        sensitive = true;
    }
    const double ceiling = p.a / (p.b - p.chi * p.mu);
    if (std::exp(-kappa * g.half_length) >= ceiling)
        throw std::invalid_argument(
            "fixed_point_wave: domain too small to resolve the wave tail");

    WaveEnvelopes env;
    env.kappa = kappa;
    env.kappa_tilde = default_kappa_tilde(p, kappa);
    if (!(env.kappa_tilde > kappa)) {  // degenerate at the boundary kappa
        env.kappa_tilde = kappa * (1.0 + 1e-9);
        sensitive = true;
    }
    env.big_d = 1.0;
    env.ceiling = ceiling;

    const double c = c_kappa(p, kappa);
    ScalarField u = ScalarField::sampled(g, [&](double x) { return env.upper(x); });

    double omega = cfg.omega;
    double prev_gap = std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    int iters = 0;

    for (int outer = 1; outer <= cfg.max_outer; ++outer) {
        wave_detail::FrozenFields f;
        {
            PsiPair k = psi_fast(u, p, TailPolicy::ConstantLeftZeroRight);
            f.psi = std::move(k.psi);
            f.psi_x = std::move(k.psi_x);
        }
        while (!wave_detail::is_discrete_subsolution(env, g, f, c, p)) {
            env.big_d *= 2.0;
            if (env.big_d > static_cast<double>(1u << 30))
                throw std::runtime_error(
                    "fixed_point_wave: no admissible D found for the lower envelope");
        }

        ScalarField relaxed = relax_to_steady(u, kappa, p, cfg, &env, warnings);
        ScalarField next(g);
        for (int i = 0; i < g.n_nodes(); ++i)
            next[i] = (1.0 - omega) * u[i] + omega * relaxed[i];

        // envelope sandwich at every outer iterate
        for (int i = 0; i < g.n_nodes(); ++i) {
            const double x = g.x(i);
            if (next[i] > env.upper(x) + 1e-7 || next[i] < env.lower(x) - 1e-7)
                throw std::runtime_error("fixed_point_wave: envelope violation");
        }

        gap = sup_diff(next, u);
        u = std::move(next);
        iters = outer;
        if (gap < cfg.fp_tol) break;
        if (gap > prev_gap && omega > 1.0 / 64.0) omega *= 0.5;  // damp oscillation
        prev_gap = gap;
    }
    if (!(gap < cfg.fp_tol)) {
        std::ostringstream msg;
        msg << "fixed_point_wave: no convergence in " << cfg.max_outer
            << " outer iterations (last gap " << gap << ")";
        throw std::runtime_error(msg.str());
    }

    WaveProfile w;
    w.kappa = kappa;
    w.speed = c;
    PsiPair k = psi_fast(u, p, TailPolicy::ConstantLeftZeroRight);
    w.u = std::move(u);
    w.v = std::move(k.psi);
    w.v_x = std::move(k.psi_x);
    w.envelopes = env;
    w.outer_iters = iters;
    w.final_gap = gap;
    w.sensitive = sensitive;
    w.diag = verify_profile(w, p, cfg);
    return w;
}

/// Pure diagnostics of a candidate profile: max interior residual of the
/// traveling-wave elliptic equation, right-tail ratio deviation, the value at
/// the left probe, and the envelope membership margin.
inline ProfileDiagnostics verify_profile(const WaveProfile& w, const ModelParams& p,
                                         const FixedPointConfig& cfg) {
    const Grid& g = w.u.grid;
    const double buf = boundary_buffer(p);
    const int lo = first_interior_node(g, buf);
    const int hi = last_interior_node(g, buf);

    ProfileDiagnostics d{};
    wave_detail::FrozenFields f{w.v, w.v_x};
    for (int i = std::max(1, lo); i <= std::min(g.n_nodes() - 2, hi); ++i) {
        const double r =
            wave_detail::frozen_operator(w.u.values, i, g, f, w.speed, p);
        d.max_elliptic_residual = std::max(d.max_elliptic_residual, std::abs(r));
    }

    d.tail_window_x_lo = -std::log(cfg.ratio_window_hi) / w.kappa;
    d.tail_window_x_hi = -std::log(cfg.ratio_window_lo) / w.kappa;
    bool any = false;
    for (int i = lo; i <= hi; ++i) {
        const double x = g.x(i);
        if (x < d.tail_window_x_lo || x > d.tail_window_x_hi) continue;
        d.tail_ratio_max_dev =
            std::max(d.tail_ratio_max_dev, std::abs(w.u[i] * std::exp(w.kappa * x) - 1.0));
        any = true;
    }
    if (!any) d.tail_ratio_max_dev = std::numeric_limits<double>::quiet_NaN();

    d.left_probe_x = g.x(lo);
    d.left_value = w.u[lo];

    double margin = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.n_nodes(); ++i) {
        const double x = g.x(i);
        margin = std::max(margin, w.u[i] - w.envelopes.upper(x));
        margin = std::max(margin, w.envelopes.lower(x) - w.u[i]);
    }
    d.envelope_margin = margin;
    return d;
}

// ---------------------------------------------------------------------------
// Speed scan
// ---------------------------------------------------------------------------

enum class ScanStatus {
    ExcludedBelowMinimal,  ///< c < 2*sqrt(a): no such wave exists; not attempted
    OutsideProvenTheory,   ///< kappa(c) > min{sqrt(a),sqrt(lambda)}: open range
    Solved,
    SolvedSensitive,  ///< solved at the degenerate boundary speed
    Failed
};

struct ScanEntry {
    double c = 0.0;
    double kappa = std::numeric_limits<double>::quiet_NaN();
    ScanStatus status = ScanStatus::Failed;
    std::string note;
    std::optional<WaveProfile> profile;
};

/// For each requested speed: below 2*sqrt(a) the entry is recorded as excluded
/// (the nonexistence is theory, corroborated indirectly by the measured lower
/// spreading bound of compact-data runs, never by absence of convergence);
/// above, c is mapped to kappa = (c - sqrt(c^2-4a))/2 and the fixed point is
/// attempted when kappa is inside the proven range.
inline std::vector<ScanEntry> min_speed_scan(const ModelParams& p,
                                             const std::vector<double>& speeds,
                                             const Grid& g,
                                             const FixedPointConfig& cfg = {}) {
    p.validate();
    if (!(p.chi * p.mu < p.b))
        throw std::invalid_argument("min_speed_scan requires chi*mu < b");
    const double c0 = 2.0 * std::sqrt(p.a);
    const double kappa_max = std::min(std::sqrt(p.a), std::sqrt(p.lambda));

    std::vector<ScanEntry> out;
    for (double c : speeds) {
        ScanEntry e;
        e.c = c;
        if (c < c0 * (1.0 - 1e-12)) {
            e.status = ScanStatus::ExcludedBelowMinimal;
            e.note =
                "no nontrivial wave with speed below 2*sqrt(a); compact-data level "
                "sets advance at >= 2*sqrt(a), so no slower profile can attract";
            out.push_back(std::move(e));
            continue;
        }
        e.kappa = kappa_of_speed(p, std::max(c, c0));
        const bool boundary = std::abs(e.kappa - kappa_max) <= 1e-9 * kappa_max;
        if (e.kappa > kappa_max && !boundary) {
            e.status = ScanStatus::OutsideProvenTheory;
            e.note =
                "kappa(c) exceeds min(sqrt(a), sqrt(lambda)); wave existence in this "
                "speed range is open, not attempted";
            out.push_back(std::move(e));
            continue;
        }
        try {
            WaveProfile w = fixed_point_wave(g, e.kappa, p, cfg, boundary);
            e.status = boundary ? ScanStatus::SolvedSensitive : ScanStatus::Solved;
            if (boundary)
                e.note = "boundary speed: envelope construction degenerates here, "
                         "convergence is sensitive";
            e.profile = std::move(w);
        } catch (const std::exception& ex) {
            e.status = ScanStatus::Failed;
            e.note = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace chemfront

#endif  // CHEMFRONT_WAVE_HPP
