#ifndef CHEMFRONT_RUNNER_HPP
#define CHEMFRONT_RUNNER_HPP

/**
 * @file runner.hpp
 * @brief Scenario dispatch: runs a validated ScenarioConfig through the
 *        appropriate module pipeline, emits CSV artifacts and a
 *        deterministic report, and evaluates the requested assertions.
 *
 * Identical configs produce bit-identical CSV and report files: randomness is
 * seeded from the config, nothing timestamped goes into the artifacts (wall
 * clock is reported on stdout only), and sweep aggregation is by point index
 * regardless of the number of worker threads.
 */

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "chemfront/config.hpp"
#include "chemfront/csv.hpp"
#include "chemfront/front.hpp"
#include "chemfront/kernel.hpp"
#include "chemfront/solver.hpp"
#include "chemfront/theory.hpp"
#include "chemfront/wave.hpp"

namespace chemfront {

struct Measurement {
    std::string name;
    double value = std::nan("");
    double window_lo = std::nan("");
    double window_hi = std::nan("");
    double target = std::nan("");
    double tolerance = std::nan("");
    int pass = -1;  ///< -1 = informational, 0 = fail, 1 = pass
};

struct RunReport {
    ScenarioKind kind = ScenarioKind::Simulate;
    bool overall_pass = true;
    double wall_seconds = 0.0;  ///< stdout only, never written to artifacts
    std::vector<std::string> warnings;
    std::optional<SpeedConstants> theory;
    bool theory_hypothesis_h = false;
    bool theory_global_existence = false;
    std::vector<Measurement> measurements;
    std::vector<std::string> notes;
    std::string config_echo;

    Measurement& add(Measurement m) {
        if (m.pass == 0) overall_pass = false;
        measurements.push_back(std::move(m));
        return measurements.back();
    }
    const Measurement* find(const std::string& name) const {
        for (const auto& m : measurements)
            if (m.name == name) return &m;
        return nullptr;
    }
};

struct RunOptions {
    std::string out_dir_override;
    bool refine = false;
    int jobs = 1;
    bool write_outputs = true;
};

namespace runner_detail {

inline Measurement checked(std::string name, double value, double target, double tol) {
    Measurement m;
    m.name = std::move(name);
    m.value = value;
    m.target = target;
    m.tolerance = tol;
    m.pass = std::abs(value - target) <= tol ? 1 : 0;
    return m;
}

inline Measurement bounded(std::string name, double value, double max_allowed) {
    Measurement m;
    m.name = std::move(name);
    m.value = value;
    m.target = max_allowed;
    m.tolerance = 0.0;
    m.pass = value <= max_allowed ? 1 : 0;
    return m;
}

inline Measurement info(std::string name, double value) {
    Measurement m;
    m.name = std::move(name);
    m.value = value;
    return m;
}

inline std::string out_dir(const ScenarioConfig& cfg, const RunOptions& opt) {
    return opt.out_dir_override.empty() ? cfg.output.directory : opt.out_dir_override;
}

inline void fill_theory(RunReport& rep, const ModelParams& p) {
    rep.theory_global_existence = global_existence(p);
    rep.theory_hypothesis_h = hypothesis_H(p);
    if (rep.theory_global_existence) rep.theory = speed_constants(p);
}

inline void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    CsvWriter w(path, {"t", "x", "u", "v", "v_x"});
    for (const State& s : traj.snapshots)
        for (int i = 0; i < s.u.size(); ++i)
            w.row({s.t, s.u.grid.x(i), s.u[i], s.v[i], s.v_x[i]});
    w.close();
}

inline void write_fronts_csv(const std::string& path, const FrontTrace& trace) {
    CsvWriter w(path, {"t", "left_pos", "right_pos", "theta"});
    for (const FrontSample& s : trace.samples)
        w.row({s.t, s.left_clipped ? std::nan("") : s.left,
               s.right_clipped ? std::nan("") : s.right, trace.theta});
    w.close();
}

inline void write_profile_csv(const std::string& path, const WaveProfile& w) {
    CsvWriter out(path, {"x", "U", "V", "V_x", "envelope_lo", "envelope_hi"});
    const Grid& g = w.u.grid;
    for (int i = 0; i < g.n_nodes(); ++i) {
        const double x = g.x(i);
        out.row({x, w.u[i], w.v[i], w.v_x[i], w.envelopes.lower(x), w.envelopes.upper(x)});
    }
    out.close();
}

}  // namespace runner_detail

// ---------------------------------------------------------------------------
// kernel self test
// ---------------------------------------------------------------------------

inline RunReport run_kernel_selftest(const ScenarioConfig& cfg, const RunOptions& opt) {
    using namespace runner_detail;
    RunReport rep;
    rep.kind = cfg.kind;
    const ModelParams& p = cfg.model;
    const Grid g = cfg.make_grid();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const TailPolicy tails[3] = {TailPolicy::Zero, TailPolicy::ConstantLeftZeroRight,
                                 TailPolicy::ConstantBoth};
    double worst_gap = 0.0, worst_law = 0.0;
    std::vector<std::vector<double>> rows;
    const int n_fields = 100;
    for (int k = 0; k < n_fields; ++k) {
        ScalarField u(g);
        for (double& v : u.values) v = unit(rng);
        const TailPolicy tail = tails[k % 3];
        PsiPair fast = psi_fast(u, p, tail);
        ScalarField direct = psi_direct(u, p, tail);
        const double scale = std::max(1e-300, direct.max_value());
        const double gap = sup_diff(fast.psi, direct) / scale;

        double law = 0.0;
        const double sl = std::sqrt(p.lambda);
        const int lo = first_interior_node(g, boundary_buffer(p));
        const int hi = last_interior_node(g, boundary_buffer(p));
        for (int i = lo; i <= hi; ++i)
            law = std::max(law, (std::abs(fast.psi_x[i]) - sl * fast.psi[i]) / scale);

        worst_gap = std::max(worst_gap, gap);
        worst_law = std::max(worst_law, law);
        rows.push_back({static_cast<double>(k), gap, law});
    }

    // linearity on one random pair
    {
        ScalarField u1(g), u2(g);
        for (double& v : u1.values) v = unit(rng);
        for (double& v : u2.values) v = unit(rng);
        const double al = 0.7, be = 1.9;
        ScalarField mix(g);
        for (int i = 0; i < g.n_nodes(); ++i) mix[i] = al * u1[i] + be * u2[i];
        PsiPair pm = psi_fast(mix, p, TailPolicy::Zero);
        PsiPair p1 = psi_fast(u1, p, TailPolicy::Zero);
        PsiPair p2 = psi_fast(u2, p, TailPolicy::Zero);
        double gap = 0.0;
        for (int i = 0; i < g.n_nodes(); ++i)
            gap = std::max(gap, std::abs(pm.psi[i] - al * p1.psi[i] - be * p2.psi[i]));
        rep.add(runner_detail::bounded("linearity_gap", gap / std::max(1.0, pm.psi.max_value()),
                                       1e-12));
    }

    // residual order on a smooth bump, h vs h/2
    {
        auto bump = [](double x) { return std::exp(-0.5 * x * x); };
        const Grid g1 = Grid::make(std::min(15.0, g.half_length), 256);
        const Grid g2 = Grid::make(g1.half_length, 512);
        ScalarField u1 = ScalarField::sampled(g1, bump);
        ScalarField u2 = ScalarField::sampled(g2, bump);
        const double r1 = elliptic_residual(u1, psi_fast(u1, p, TailPolicy::Zero).psi, p);
        const double r2 = elliptic_residual(u2, psi_fast(u2, p, TailPolicy::Zero).psi, p);
        rep.add(runner_detail::checked("residual_halving_ratio", r1 / r2, 4.0, 0.5));
    }

    rep.add(runner_detail::bounded("oracle_max_rel_gap", worst_gap, 1e-10));
    rep.add(runner_detail::bounded("kernel_law_max_excess", worst_law, 1e-10));
    fill_theory(rep, p);
    rep.config_echo = serialize_config(cfg);

    if (opt.write_outputs) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir(cfg, opt));
        write_csv(out_dir(cfg, opt) + "/kernel_selftest.csv",
                  {"field", "rel_gap", "law_excess"}, rows);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// simulate / speed
// ---------------------------------------------------------------------------

inline RunReport run_dynamics(const ScenarioConfig& cfg, const RunOptions& opt) {
    using namespace runner_detail;
    RunReport rep;
    rep.kind = cfg.kind;
    const ModelParams& p = cfg.model;
    fill_theory(rep, p);

    const Grid g = cfg.make_grid();
    const bool enforce = cfg.kind == ScenarioKind::Speed &&
                         cfg.initial.kind == InitialKind::Exponential;
    ScalarField u0 = make_initial(cfg.initial, g, enforce ? &p : nullptr);

    SolverConfig scfg = cfg.solver;
    if (cfg.analysis.envelope_m_factor > 0.0) {
        EnvelopeMonitor mon;
        mon.kappa = cfg.analysis.kappa;
        mon.m = cfg.analysis.envelope_m_factor *
                std::max(u0.max_value(), p.linf_ceiling());
        scfg.envelope = mon;
    }

    Trajectory traj = simulate(u0, scfg, p);
    rep.warnings = traj.warnings;

    rep.add(info("final_time", traj.back().t));
    rep.add(info("final_max_u", traj.back().u.max_value()));
    rep.add(info("final_min_u", traj.back().u.min_value()));

    FrontTrace trace = track_level(traj, cfg.analysis.theta);
    if (!trace.samples.empty()) {
        rep.add(info("final_right_pos", trace.samples.back().right));
        rep.add(info("final_left_pos", trace.samples.back().left));
    }
    if (trace.omitted > 0)
        rep.notes.push_back("level set empty at " + std::to_string(trace.omitted) +
                            " snapshots (omitted from the trace)");

    if (cfg.kind == ScenarioKind::Speed) {
        SpeedEstimate est = estimate_speed(trace, FrontSide::Right,
                                           cfg.analysis.window_lo, cfg.analysis.window_hi);
        Measurement m;
        m.name = "c_hat_right";
        m.value = est.c_hat;
        m.window_lo = est.window_lo;
        m.window_hi = est.window_hi;
        if (!std::isnan(cfg.analysis.expected_speed)) {
            m.target = cfg.analysis.expected_speed;
            m.tolerance = cfg.analysis.speed_tol;
            m.pass = std::abs(m.value - m.target) <= m.tolerance ? 1 : 0;
        }
        rep.add(m);
        rep.add(info("c_hat_stderr", est.stderr_));
        if (rep.theory)
            rep.add(info("c_hat_minus_c0_star", est.c_hat - rep.theory->c0_star));

        if (cfg.initial.kind == InitialKind::CompactBump) {
            SpreadingInterval si =
                spreading_interval(traj, cfg.analysis.speed_grid_lo,
                                   cfg.analysis.speed_grid_hi,
                                   cfg.analysis.speed_grid_step, cfg.analysis.theta);
            Measurement lo_m = info("spreading_c_minus", si.c_minus);
            Measurement hi_m = info("spreading_c_plus", si.c_plus);
            if (!std::isnan(cfg.analysis.spreading_lo)) {
                lo_m.target = cfg.analysis.spreading_lo;
                lo_m.pass = si.c_minus >= cfg.analysis.spreading_lo ? 1 : 0;
            }
            if (!std::isnan(cfg.analysis.spreading_hi)) {
                hi_m.target = cfg.analysis.spreading_hi;
                hi_m.pass = si.c_plus <= cfg.analysis.spreading_hi ? 1 : 0;
            }
            rep.add(lo_m);
            rep.add(hi_m);
            if (si.grid_edge_hit)
                rep.notes.push_back("spreading interval hit the tested speed-grid edge");
        }

        if (!std::isnan(cfg.analysis.behind_c)) {
            const double t_eval = std::isnan(cfg.analysis.behind_time)
                                      ? traj.back().t
                                      : cfg.analysis.behind_time;
            const double dev = behind_front_deviation(traj, cfg.analysis.behind_c, p, t_eval);
            Measurement m2 = bounded("behind_front_deviation", dev, cfg.analysis.behind_tol);
            m2.window_hi = t_eval;
            rep.add(m2);
        }

        if (!std::isnan(cfg.analysis.shape_tol)) {
            const double dev = shape_ratio_ahead(traj, cfg.analysis.kappa, p,
                                                 cfg.analysis.epsilon,
                                                 cfg.analysis.ratio_floor);
            rep.add(bounded("shape_ratio_max_dev", dev, cfg.analysis.shape_tol));
        }

        if (cfg.initial.kind == InitialKind::Exponential) {
            try {
                DecayFit fit = fit_decay(traj.back().u, cfg.analysis.decay_lo,
                                         cfg.analysis.decay_hi, boundary_buffer(p));
                rep.add(info("tail_kappa_hat", fit.kappa_hat));
            } catch (const std::exception& e) {
                rep.notes.push_back(std::string("tail decay fit skipped: ") + e.what());
            }
        }
    }

    rep.config_echo = serialize_config(cfg);
    if (opt.write_outputs) {
        namespace fs = std::filesystem;
        const std::string dir = out_dir(cfg, opt);
        fs::create_directories(dir);
        if (cfg.output.write_fronts) write_fronts_csv(dir + "/fronts.csv", trace);
        if (cfg.output.write_trajectory)
            write_trajectory_csv(dir + "/trajectory.csv", traj);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// wave
// ---------------------------------------------------------------------------

inline RunReport run_wave(const ScenarioConfig& cfg, const RunOptions& opt) {
    using namespace runner_detail;
    RunReport rep;
    rep.kind = cfg.kind;
    const ModelParams& p = cfg.model;
    fill_theory(rep, p);

    const Grid g = cfg.make_grid();
    FixedPointConfig fpc;
    fpc.fp_tol = cfg.analysis.fp_tol;
    fpc.steady_tol = cfg.analysis.steady_tol;
    fpc.max_outer = cfg.analysis.max_outer;
    fpc.omega = cfg.analysis.omega;
    fpc.ratio_window_lo = cfg.analysis.ratio_floor;
    fpc.ratio_window_hi = cfg.analysis.decay_hi;

    namespace fs = std::filesystem;
    const std::string dir = out_dir(cfg, opt);
    if (opt.write_outputs) fs::create_directories(dir);

    if (!cfg.analysis.scan_speeds.empty()) {
        std::vector<ScanEntry> scan = min_speed_scan(p, cfg.analysis.scan_speeds, g, fpc);
        std::vector<std::vector<double>> rows;
        for (const ScanEntry& e : scan) {
            const double code = static_cast<double>(static_cast<int>(e.status));
            const double resid =
                e.profile ? e.profile->diag.max_elliptic_residual : std::nan("");
            rows.push_back({e.c, e.kappa, code, resid});
            std::ostringstream note;
            note << "c=" << format_double(e.c) << ": ";
            switch (e.status) {
                case ScanStatus::ExcludedBelowMinimal: note << "excluded"; break;
                case ScanStatus::OutsideProvenTheory: note << "outside proven theory"; break;
                case ScanStatus::Solved: note << "solved"; break;
                case ScanStatus::SolvedSensitive: note << "solved (sensitive boundary)"; break;
                case ScanStatus::Failed: note << "failed"; break;
            }
            if (!e.note.empty()) note << " - " << e.note;
            rep.notes.push_back(note.str());
        }
        if (opt.write_outputs)
            write_csv(dir + "/scan.csv", {"c", "kappa", "status", "residual"}, rows);
        rep.add(info("scan_entries", static_cast<double>(scan.size())));
    } else {
        std::vector<std::string> warnings;
        WaveProfile w = fixed_point_wave(g, cfg.analysis.kappa, p, fpc, false, &warnings);
        rep.warnings = warnings;
        rep.add(info("kappa", w.kappa));
        rep.add(info("speed_c_kappa", w.speed));
        rep.add(info("outer_iters", w.outer_iters));
        rep.add(info("final_gap", w.final_gap));
        rep.add(info("envelope_margin", w.diag.envelope_margin));
        rep.add(info("lower_envelope_d", w.envelopes.big_d));
        Measurement r = info("elliptic_residual", w.diag.max_elliptic_residual);
        if (!std::isnan(cfg.analysis.residual_tol)) {
            r.target = cfg.analysis.residual_tol;
            r.pass = r.value <= r.target ? 1 : 0;
        }
        rep.add(r);
        Measurement tr = info("tail_ratio_max_dev", w.diag.tail_ratio_max_dev);
        tr.window_lo = w.diag.tail_window_x_lo;
        tr.window_hi = w.diag.tail_window_x_hi;
        if (!std::isnan(cfg.analysis.tail_dev_tol)) {
            tr.target = cfg.analysis.tail_dev_tol;
            tr.pass = tr.value <= tr.target ? 1 : 0;
        }
        rep.add(tr);
        const double left_dev = std::abs(w.diag.left_value - p.carrying_capacity());
        Measurement lv = info("left_probe_deviation", left_dev);
        lv.window_lo = w.diag.left_probe_x;
        if (!std::isnan(cfg.analysis.left_dev_tol)) {
            lv.target = cfg.analysis.left_dev_tol;
            lv.pass = left_dev <= lv.target ? 1 : 0;
        }
        rep.add(lv);
        if (opt.write_outputs && cfg.output.write_profile)
            write_profile_csv(dir + "/profile.csv", w);
    }

    rep.config_echo = serialize_config(cfg);
    return rep;
}

// ---------------------------------------------------------------------------
// report rendering and the top-level dispatcher
// ---------------------------------------------------------------------------

inline std::string render_report(const RunReport& rep) {
    std::ostringstream out;
    out << "chemfront report\n";
    out << "kind: " << to_string(rep.kind) << "\n";
    out << "overall: " << (rep.overall_pass ? "PASS" : "FAIL") << "\n";
    if (!rep.warnings.empty()) {
        out << "\n[warnings]\n";
        for (const auto& w : rep.warnings) out << "- " << w << "\n";
    }
    out << "\n[theory]\n";
    out << "global_existence: " << (rep.theory_global_existence ? "true" : "false") << "\n";
    out << "hypothesis_H: " << (rep.theory_hypothesis_h ? "true" : "false") << "\n";
    if (rep.theory) {
        out << "c0_star: " << format_double(rep.theory->c0_star) << "\n";
        out << "a_star: " << format_double(rep.theory->a_star) << "\n";
        out << "c_star: " << format_double(rep.theory->c_star) << "\n";
        out << "c_star_star: " << format_double(rep.theory->c_star_star) << "\n";
    }
    out << "\n[measurements]\n";
    for (const Measurement& m : rep.measurements) {
        out << m.name << " = " << format_double(m.value);
        if (!std::isnan(m.window_lo) || !std::isnan(m.window_hi))
            out << " window=[" << format_double(m.window_lo) << ", "
                << format_double(m.window_hi) << "]";
        if (!std::isnan(m.target)) {
            out << " target=" << format_double(m.target);
            if (!std::isnan(m.tolerance) && m.tolerance != 0.0)
                out << " tol=" << format_double(m.tolerance);
        }
        if (m.pass >= 0) out << (m.pass ? " PASS" : " FAIL");
        out << "\n";
    }
    if (!rep.notes.empty()) {
        out << "\n[notes]\n";
        for (const auto& n : rep.notes) out << "- " << n << "\n";
    }
    out << "\n[config]\n" << rep.config_echo;
    return out.str();
}

RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& opt);

inline RunReport run_sweep(const ScenarioConfig& cfg, const RunOptions& opt) {
    using namespace runner_detail;
    RunReport rep;
    rep.kind = cfg.kind;
    fill_theory(rep, cfg.model);

    const int n = static_cast<int>(cfg.sweep_values.size());
    std::vector<RunReport> sub(n);
    std::vector<std::string> errors(n);

    auto run_point = [&](int i) {
        ScenarioConfig point = cfg;
        point.kind = cfg.sweep_kind;
        point.seed = cfg.seed + static_cast<unsigned long>(i);
        const double v = cfg.sweep_values[i];
        if (cfg.sweep_param == "chi") point.model.chi = v;
        else if (cfg.sweep_param == "a") point.model.a = v;
        else if (cfg.sweep_param == "b") point.model.b = v;
        else if (cfg.sweep_param == "lambda") point.model.lambda = v;
        else if (cfg.sweep_param == "mu") point.model.mu = v;
        char name[32];
        std::snprintf(name, sizeof(name), "point_%03d", i);
        RunOptions po = opt;
        po.refine = false;
        po.out_dir_override = out_dir(cfg, opt) + "/" + name;
        try {
            validate_config(point);
            sub[i] = run_scenario(point, po);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) run_point(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic_int next{0};
        for (int t = 0; t < std::min(jobs, n); ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) run_point(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<double>> rows;
    for (int i = 0; i < n; ++i) {
        const double v = cfg.sweep_values[i];
        double c_hat = std::nan(""), resid = std::nan(""), max_u = std::nan("");
        bool ok = errors[i].empty();
        if (ok) {
            if (const Measurement* m = sub[i].find("c_hat_right")) c_hat = m->value;
            if (const Measurement* m = sub[i].find("elliptic_residual")) resid = m->value;
            if (const Measurement* m = sub[i].find("final_max_u")) max_u = m->value;
            if (!sub[i].overall_pass) rep.overall_pass = false;
        } else {
            rep.notes.push_back("point " + std::to_string(i) + " (" + cfg.sweep_param +
                                "=" + format_double(v) + ") failed: " + errors[i]);
            rep.overall_pass = false;
        }
        rows.push_back({v, ok ? 1.0 : 0.0, c_hat, resid, max_u});
    }
    rep.add(runner_detail::info("sweep_points", n));

    rep.config_echo = serialize_config(cfg);
    if (opt.write_outputs) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir(cfg, opt));
        write_csv(out_dir(cfg, opt) + "/sweep.csv",
                  {cfg.sweep_param, "ok", "c_hat", "elliptic_residual", "final_max_u"},
                  rows);
        for (int i = 0; i < n; ++i) {
            if (!errors[i].empty()) continue;
            char name[32];
            std::snprintf(name, sizeof(name), "point_%03d", i);
            std::ofstream f(out_dir(cfg, opt) + "/" + std::string(name) + "/report.txt",
                            std::ios::binary);
            f << render_report(sub[i]);
        }
    }
    return rep;
}

inline RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    switch (cfg.kind) {
        case ScenarioKind::KernelSelftest: rep = run_kernel_selftest(cfg, opt); break;
        case ScenarioKind::Simulate:
        case ScenarioKind::Speed: rep = run_dynamics(cfg, opt); break;
        case ScenarioKind::Wave: rep = run_wave(cfg, opt); break;
        case ScenarioKind::Sweep: rep = run_sweep(cfg, opt); break;
    }

    if (opt.refine && cfg.kind != ScenarioKind::Sweep &&
        cfg.kind != ScenarioKind::KernelSelftest) {
        ScenarioConfig fine = cfg;
        fine.grid_spacing *= 0.5;
        if (cfg.kind != ScenarioKind::Wave) {
            fine.solver.dt *= 0.5;
            fine.solver.observer_stride *= 2;
        }
        RunOptions fo = opt;
        fo.write_outputs = false;
        fo.refine = false;
        RunReport fine_rep;
        switch (fine.kind) {
            case ScenarioKind::Simulate:
            case ScenarioKind::Speed: fine_rep = run_dynamics(fine, fo); break;
            case ScenarioKind::Wave: fine_rep = run_wave(fine, fo); break;
            default: break;
        }
        for (const Measurement& m : rep.measurements) {
            if (const Measurement* f = fine_rep.find(m.name)) {
                Measurement d = runner_detail::info("refine_delta_" + m.name,
                                                    std::abs(f->value - m.value));
                rep.measurements.push_back(d);
            }
        }
        rep.notes.push_back("refine: deltas against spacing/2" +
                            std::string(cfg.kind != ScenarioKind::Wave ? " and dt/2" : ""));
    }

    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (opt.write_outputs) {
        namespace fs = std::filesystem;
        const std::string dir = runner_detail::out_dir(cfg, opt);
        fs::create_directories(dir);
        std::ofstream f(dir + "/report.txt", std::ios::binary);
        f << render_report(rep);
    }
    return rep;
}

}  // namespace chemfront

#endif  // CHEMFRONT_RUNNER_HPP
