#ifndef CHEMFRONT_SOLVER_HPP
#define CHEMFRONT_SOLVER_HPP

/**
 * @file solver.hpp
 * @brief Time integration of u_t = u_xx - chi*(u*v_x)_x + u*(a - b*u) with
 *        v = Psi(.;u) refreshed from the kernel every step.
 *
 * The chemotactic term is discretized in conservative flux form with
 * arithmetic-mean face densities and centered face values of v_x. Diffusion
 * is implicit (tridiagonal solve) under the IMEX scheme or explicit under
 * ExplicitEuler; advection and reaction are always explicit. Boundaries are
 * zero-flux at +-L. The step refuses instead of running unstably: the dt
 * limit is recomputed every step and exceeding it is an error, as is any
 * negative undershoot beyond the configured tolerance (no clipping).
 */

#include <cmath>
#include <functional>
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

enum class Scheme { ExplicitEuler, ImexDiffusionImplicit };

/// Optional runtime check u(t,x) <= m * e^{-kappa(|x| - c_kappa t)} * (1+1e-6),
/// valid when u0 <= min{m, m e^{-kappa|x|}}, m >= a/(b-chi*mu) and kappa is
/// admissible.
struct EnvelopeMonitor {
    double kappa;
    double m;
};

struct SolverConfig {
    double dt = 0.02;
    double t_end = 50.0;
    double cfl_safety = 0.9;
    Scheme scheme = Scheme::ImexDiffusionImplicit;
    TailPolicy tail = TailPolicy::Zero;
    int observer_stride = 25;      ///< steps between recorded snapshots
    double neg_tolerance = 1e-10;  ///< permitted undershoot before error
    bool monitor_linf = true;
    bool monitor_kernel_law = true;
    std::optional<EnvelopeMonitor> envelope;

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be > 0");
        if (!(t_end > 0.0)) throw std::invalid_argument("SolverConfig: t_end must be > 0");
        if (!(cfl_safety > 0.0) || cfl_safety > 1.0)
            throw std::invalid_argument("SolverConfig: cfl_safety must be in (0,1]");
        if (observer_stride < 1)
            throw std::invalid_argument("SolverConfig: observer_stride must be >= 1");
    }
};

struct State {
    double t = 0.0;
    ScalarField u;
    ScalarField v;
    ScalarField v_x;
};

struct Trajectory {
    std::vector<State> snapshots;
    ModelParams params{};
    SolverConfig config{};
    std::vector<std::string> warnings;

    const State& back() const { return snapshots.back(); }
};

// ---------------------------------------------------------------------------
// Initial data classes
// ---------------------------------------------------------------------------

enum class InitialKind { CompactBump, FrontLike, Exponential };

struct InitialSpec {
    InitialKind kind = InitialKind::CompactBump;
    // compact bump: height * cos^2(pi (x-center)/width) on |x-center| <= width/2
    double height = 1.0;
    double width = 2.0;
    double center = 0.0;
    // front-like: plateau `level` for x <= interface, cosine ramp to exactly 0
    double level = 1.0;
    double interface_pos = 0.0;
    double ramp_width = 2.0;
    // exponential: min{floor_level, e^{-kappa x}}
    double kappa = 0.5;
    double floor_level = 1.0;
};

/// Samples the requested initial-data class. If `require_admissible` is given
/// and the kind is Exponential, enforces 0 < kappa < sqrt(a) plus the decay
/// admissibility constraint (the hypotheses of the exponential-data speed
/// statements).
inline ScalarField make_initial(const InitialSpec& spec, const Grid& g,
                                const ModelParams* require_admissible = nullptr) {
    switch (spec.kind) {
        case InitialKind::CompactBump: {
            if (!(spec.width > 0.0) || !(spec.height >= 0.0))
                throw std::invalid_argument("make_initial: bump needs width>0, height>=0");
            return ScalarField::sampled(g, [&](double x) {
                const double xi = x - spec.center;
                if (std::abs(xi) >= 0.5 * spec.width) return 0.0;
                const double c = std::cos(M_PI * xi / spec.width);
                return spec.height * c * c;
            });
        }
        case InitialKind::FrontLike: {
            if (!(spec.level > 0.0) || !(spec.ramp_width > 0.0))
                throw std::invalid_argument("make_initial: front needs level>0, ramp>0");
            return ScalarField::sampled(g, [&](double x) {
                const double xi = x - spec.interface_pos;
                if (xi <= 0.0) return spec.level;
                if (xi >= spec.ramp_width) return 0.0;
                const double c = std::cos(0.5 * M_PI * xi / spec.ramp_width);
                return spec.level * c * c;
            });
        }
        case InitialKind::Exponential: {
            if (!(spec.kappa > 0.0) || !(spec.floor_level > 0.0))
                throw std::invalid_argument("make_initial: exponential needs kappa>0, floor>0");
            if (require_admissible) {
                const ModelParams& p = *require_admissible;
                if (!(spec.kappa < std::sqrt(p.a)))
                    throw std::invalid_argument(
                        "make_initial: exponential data needs kappa < sqrt(a) here");
                if (!kappa_admissible(p, spec.kappa))
                    throw std::invalid_argument(
                        "make_initial: kappa violates the admissibility constraint "
                        "(kappa-sqrt(lambda))+/(kappa+sqrt(lambda)) <= 2(b-chi*mu)/(chi*mu)");
            }
            return ScalarField::sampled(g, [&](double x) {
                return std::min(spec.floor_level, std::exp(-spec.kappa * x));
            });
        }
    }
    throw std::invalid_argument("make_initial: unknown kind");
}

// ---------------------------------------------------------------------------
// Stepping
// ---------------------------------------------------------------------------

class RdStepper {
public:
    RdStepper(const Grid& g, const SolverConfig& cfg, const ModelParams& p)
        : grid_(g), cfg_(cfg), p_(p) {
        cfg.validate();
        p.validate();
        if (cfg_.scheme == Scheme::ImexDiffusionImplicit) {
            const int n = g.n_nodes();
            const double r = cfg_.dt / (g.spacing * g.spacing);
            std::vector<double> lo(n, -r), di(n, 1.0 + 2.0 * r), up(n, -r);
            up[0] = -2.0 * r;      // zero-flux ghost u_{-1} = u_1
            lo[n - 1] = -2.0 * r;  // zero-flux ghost u_{n+1} = u_{n-1}
            diffusion_ = TridiagonalSolver(std::move(lo), std::move(di), std::move(up));
        }
    }

    const Grid& grid() const { return grid_; }
    const SolverConfig& config() const { return cfg_; }

    /// Attaches the kernel fields to a density, making a consistent State.
    State make_state(double t, ScalarField u) const {
        PsiPair k = psi_fast(u, p_, cfg_.tail);
        return State{t, std::move(u), std::move(k.psi), std::move(k.psi_x)};
    }

    /// Largest dt the current state admits (before the safety factor).
    double dt_limit(const State& s) const {
        const double h = grid_.spacing;
        double lim = 1.0 / (p_.a + 2.0 * p_.b * std::max(0.0, s.u.max_value()));
        if (p_.chi > 0.0) {
            double vmax = 0.0;
            for (double v : s.v_x.values) vmax = std::max(vmax, std::abs(v));
            if (p_.chi * vmax > 0.0) lim = std::min(lim, h / (p_.chi * vmax));
        }
        if (cfg_.scheme == Scheme::ExplicitEuler) lim = std::min(lim, 0.5 * h * h);
        return lim;
    }

    State advance(const State& s) const {
        const int n = grid_.n_cells;
        const double h = grid_.spacing;
        const double dt = cfg_.dt;

        const double limit = cfg_.cfl_safety * dt_limit(s);
        if (dt > limit) {
            std::ostringstream msg;
            msg << "rd_solver: dt=" << dt << " exceeds stability limit " << limit
                << " at t=" << s.t << " (refusing instead of running unstably)";
            throw std::runtime_error(msg.str());
        }

        const std::vector<double>& u = s.u.values;
        const std::vector<double>& vx = s.v_x.values;

        // chemotactic flux q = chi * u * v_x at interior faces
        std::vector<double> q(n, 0.0);
        if (p_.chi != 0.0) {
            for (int j = 0; j < n; ++j)
                q[j] = p_.chi * 0.25 * (u[j] + u[j + 1]) * (vx[j] + vx[j + 1]);
        }

        std::vector<double> next(n + 1);
        for (int i = 0; i <= n; ++i) {
            const double q_left = (i == 0) ? 0.0 : q[i - 1];
            const double q_right = (i == n) ? 0.0 : q[i];
            const double adv = -(q_right - q_left) / h;
            const double react = u[i] * (p_.a - p_.b * u[i]);
            next[i] = u[i] + dt * (adv + react);
        }

        if (cfg_.scheme == Scheme::ExplicitEuler) {
            for (int i = 0; i <= n; ++i) {
                const double ul = (i == 0) ? u[1] : u[i - 1];
                const double ur = (i == n) ? u[n - 1] : u[i + 1];
                next[i] += dt * (ul - 2.0 * u[i] + ur) / (h * h);
            }
        } else {
            diffusion_.solve(next);
        }

        ScalarField u_new(grid_);
        u_new.values = std::move(next);
        const double umin = u_new.min_value();
        if (umin < -cfg_.neg_tolerance) {
            std::ostringstream msg;
            msg << "rd_solver: undershoot " << umin << " beyond neg_tolerance at t="
                << s.t + dt;
            throw std::runtime_error(msg.str());
        }
        return make_state(s.t + dt, std::move(u_new));
    }

private:
    Grid grid_;
    SolverConfig cfg_;
    ModelParams p_;
    TridiagonalSolver diffusion_;
};

/// Single step from a consistent state.
inline State step(const State& s, const SolverConfig& cfg, const ModelParams& p) {
    return RdStepper(s.u.grid, cfg, p).advance(s);
}

namespace detail {

inline void check_snapshot_invariants(const State& s, const ModelParams& p,
                                      const SolverConfig& cfg, double u0_max) {
    if (cfg.monitor_linf && p.chi * p.mu < p.b) {
        const double bound = std::max(u0_max, p.linf_ceiling()) + 1e-8;
        if (s.u.max_value() > bound) {
            std::ostringstream msg;
            msg << "rd_solver: sup-norm monitor violated at t=" << s.t << " (max u = "
                << s.u.max_value() << " > " << bound << ")";
            throw std::runtime_error(msg.str());
        }
    }
    if (cfg.monitor_kernel_law) {
        const double sl = std::sqrt(p.lambda);
        const double slack = 1e-10 * std::max(1e-30, s.v.max_value());
        const int lo = first_interior_node(s.u.grid, boundary_buffer(p));
        const int hi = last_interior_node(s.u.grid, boundary_buffer(p));
        for (int i = lo; i <= hi; ++i) {
            if (std::abs(s.v_x[i]) > sl * s.v[i] + slack) {
                std::ostringstream msg;
                msg << "rd_solver: |v_x| <= sqrt(lambda)*v violated at t=" << s.t
                    << ", x=" << s.u.grid.x(i);
                throw std::runtime_error(msg.str());
            }
        }
    }
    if (cfg.envelope) {
        const double kappa = cfg.envelope->kappa;
        const double m = cfg.envelope->m;
        const double ck = (kappa * kappa + p.a) / kappa;
        for (int i = 0; i < s.u.size(); ++i) {
            const double expo = -kappa * (std::abs(s.u.grid.x(i)) - ck * s.t);
            if (expo > 705.0) continue;  // envelope beyond double range, trivially holds
            const double env = m * std::exp(expo);
            if (s.u[i] > env * (1.0 + 1e-6)) {
                std::ostringstream msg;
                msg << "rd_solver: super-solution envelope violated at t=" << s.t
                    << ", x=" << s.u.grid.x(i) << " (u=" << s.u[i] << ", envelope=" << env
                    << ")";
                throw std::runtime_error(msg.str());
            }
        }
    }
}

}  // namespace detail

using Observer = std::function<void(const State&)>;

/// Runs the solver to t_end, recording every observer_stride-th step (plus the
/// initial and final states) and checking the configured monitors at each
/// recorded snapshot. Deterministic; identical inputs give identical output.
inline Trajectory simulate(const ScalarField& u0, const SolverConfig& cfg,
                           const ModelParams& p,
                           const std::vector<Observer>& observers = {}) {
    cfg.validate();
    Trajectory traj;
    traj.params = p;
    traj.config = cfg;
    if (!global_existence(p))
        traj.warnings.push_back(
            "chi*mu < b fails: global existence not guaranteed, finite-time "
            "behavior out of scope");

    RdStepper stepper(u0.grid, cfg, p);
    const double u0_max = u0.max_value();
    if (u0.min_value() < -cfg.neg_tolerance)
        throw std::runtime_error("rd_solver: initial data negative beyond neg_tolerance");

    State s = stepper.make_state(0.0, u0);
    const long n_steps = std::lround(cfg.t_end / cfg.dt);

    auto record = [&](const State& st) {
        detail::check_snapshot_invariants(st, p, cfg, u0_max);
        for (const Observer& ob : observers) ob(st);
        traj.snapshots.push_back(st);
    };

    record(s);
    for (long k = 1; k <= n_steps; ++k) {
        try {
            s = stepper.advance(s);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string(e.what()) + " [simulate step " +
                                     std::to_string(k) + "]");
        }
        if (k % cfg.observer_stride == 0 || k == n_steps) record(s);
    }
    return traj;
}

}  // namespace chemfront

#endif  // CHEMFRONT_SOLVER_HPP
