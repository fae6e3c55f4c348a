#ifndef CHEMFRONT_CONFIG_HPP
#define CHEMFRONT_CONFIG_HPP

/**
 * @file config.hpp
 * @brief Scenario configuration: a flat-section key-value text format with
 *        strict validation.
 *
 * Scenario-level keys (kind, seed, sweep_*) come before the first section;
 * the sections are [model], [grid], [solver], [initial], [analysis] and
 * [output]. Unknown sections or keys are errors, constraint violations are
 * reported with the specific inequality named, and every default is filled in
 * so the echoed config is fully self-describing.
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chemfront/csv.hpp"
#include "chemfront/solver.hpp"
#include "chemfront/theory.hpp"

namespace chemfront {

enum class ScenarioKind { Simulate, Speed, Wave, Sweep, KernelSelftest };

inline const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Simulate: return "simulate";
        case ScenarioKind::Speed: return "speed";
        case ScenarioKind::Wave: return "wave";
        case ScenarioKind::Sweep: return "sweep";
        case ScenarioKind::KernelSelftest: return "kernel-selftest";
    }
    return "?";
}

struct AnalysisSpec {
    double theta = std::nan("");  ///< default a/(2b)
    double window_lo = std::nan("");
    double window_hi = std::nan("");
    double speed_grid_lo = 1.0;
    double speed_grid_hi = 3.0;
    double speed_grid_step = 0.01;
    double epsilon = 0.1;
    double ratio_floor = 1e-8;
    double decay_lo = 1e-6;
    double decay_hi = 1e-2;
    double kappa = std::nan("");       ///< wave/envelope decay rate
    double envelope_m_factor = 0.0;    ///< 0 disables the envelope monitor
    // wave solve knobs
    double fp_tol = 1e-6;
    double steady_tol = 1e-8;
    int max_outer = 50;
    double omega = 1.0;
    std::vector<double> scan_speeds;
    // requested assertions (nan = not requested)
    double expected_speed = std::nan("");
    double speed_tol = 0.06;
    double spreading_lo = std::nan("");
    double spreading_hi = std::nan("");
    double behind_c = std::nan("");
    double behind_time = std::nan("");
    double behind_tol = 0.05;
    double shape_tol = std::nan("");
    double residual_tol = std::nan("");
    double tail_dev_tol = std::nan("");
    double left_dev_tol = std::nan("");
};

struct OutputSpec {
    std::string directory = "out";
    bool write_trajectory = false;
    bool write_fronts = true;
    bool write_profile = true;
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::Simulate;
    unsigned long seed = 12345;
    std::string sweep_param;
    std::vector<double> sweep_values;
    ScenarioKind sweep_kind = ScenarioKind::Speed;

    ModelParams model{};
    double grid_half_length = 50.0;
    double grid_spacing = 0.1;
    SolverConfig solver{};
    InitialSpec initial{};
    AnalysisSpec analysis{};
    OutputSpec output{};

    Grid make_grid() const { return Grid::with_spacing(grid_half_length, grid_spacing); }
};

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace config_detail {

struct Entry {
    std::string value;
    int line;
    bool used = false;
};

using SectionMap = std::map<std::string, std::map<std::string, Entry>>;

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void fail(int line, const std::string& msg) {
    throw std::invalid_argument("config (line " + std::to_string(line) + "): " + msg);
}

inline double to_double(const Entry& e, const std::string& key) {
    const std::string v = trim(e.value);
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        fail(e.line, "key '" + key + "': cannot parse number '" + v + "'");
    return out;
}

inline long to_long(const Entry& e, const std::string& key) {
    const std::string v = trim(e.value);
    long out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        fail(e.line, "key '" + key + "': cannot parse integer '" + v + "'");
    return out;
}

inline bool to_bool(const Entry& e, const std::string& key) {
    const std::string v = trim(e.value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(e.line, "key '" + key + "': expected a boolean, got '" + v + "'");
}

inline std::vector<double> to_list(const Entry& e, const std::string& key) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(e.value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        double v = 0.0;
        auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
            fail(e.line, "key '" + key + "': cannot parse list item '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(e.line, "key '" + key + "': empty list");
    return out;
}

inline ScenarioKind to_kind(const std::string& v, int line) {
    if (v == "simulate") return ScenarioKind::Simulate;
    if (v == "speed") return ScenarioKind::Speed;
    if (v == "wave") return ScenarioKind::Wave;
    if (v == "sweep") return ScenarioKind::Sweep;
    if (v == "kernel-selftest") return ScenarioKind::KernelSelftest;
    fail(line, "unknown scenario kind '" + v +
                   "' (expected simulate|speed|wave|sweep|kernel-selftest)");
}

inline SectionMap tokenize(const std::string& text) {
    SectionMap sections;
    std::istringstream in(text);
    std::string raw;
    std::string section;  // "" = scenario-level keys
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find_first_of("#;");
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "malformed section header '" + s + "'");
            section = trim(s.substr(1, s.size() - 2));
            sections[section];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        auto& sec = sections[section];
        if (sec.count(key)) fail(line, "duplicate key '" + key + "'");
        sec[key] = Entry{value, line, false};
    }
    return sections;
}

class Reader {
public:
    Reader(SectionMap& sections, const std::string& section)
        : map_(sections.count(section) ? &sections[section] : nullptr) {}

    bool has(const std::string& key) const { return map_ && map_->count(key); }

    template <class F>
    void take(const std::string& key, F&& apply) {
        if (!has(key)) return;
        Entry& e = (*map_)[key];
        e.used = true;
        apply(e);
    }

private:
    std::map<std::string, Entry>* map_;
};

}  // namespace config_detail

ScenarioConfig parse_config(const std::string& text);
void validate_config(const ScenarioConfig& cfg);
std::string serialize_config(const ScenarioConfig& cfg);

/// Fills derived defaults (theta, level, fit windows, tail policy, stride).
inline void resolve_defaults(ScenarioConfig& cfg) {
    const ModelParams& p = cfg.model;
    if (std::isnan(cfg.analysis.theta)) cfg.analysis.theta = 0.5 * p.a / p.b;
    if (std::isnan(cfg.initial.level)) cfg.initial.level = p.a / p.b;
    if (std::isnan(cfg.initial.floor_level)) cfg.initial.floor_level = p.a / p.b;
    if (std::isnan(cfg.analysis.kappa)) cfg.analysis.kappa = cfg.initial.kappa;
    if (cfg.solver.observer_stride <= 0) {
        cfg.solver.observer_stride =
            std::max(1L, std::lround(0.5 / cfg.solver.dt));
    }
}

inline ScenarioConfig parse_config(const std::string& text) {
    using namespace config_detail;
    SectionMap sections = tokenize(text);

    static const std::vector<std::string> known_sections = {
        "", "model", "grid", "solver", "initial", "analysis", "output"};
    for (const auto& [name, entries] : sections) {
        (void)entries;
        if (std::find(known_sections.begin(), known_sections.end(), name) ==
            known_sections.end())
            throw std::invalid_argument("config: unknown section [" + name + "]");
    }

    ScenarioConfig cfg;
    cfg.initial.level = std::nan("");
    cfg.initial.floor_level = std::nan("");
    cfg.solver.observer_stride = 0;  // auto

    Reader top(sections, "");
    if (!top.has("kind"))
        throw std::invalid_argument("config: missing required top-level key 'kind'");
    top.take("kind", [&](Entry& e) { cfg.kind = to_kind(trim(e.value), e.line); });
    top.take("seed", [&](Entry& e) {
        cfg.seed = static_cast<unsigned long>(to_long(e, "seed"));
    });
    top.take("sweep_param", [&](Entry& e) { cfg.sweep_param = trim(e.value); });
    top.take("sweep_values", [&](Entry& e) { cfg.sweep_values = to_list(e, "sweep_values"); });
    top.take("sweep_kind",
             [&](Entry& e) { cfg.sweep_kind = to_kind(trim(e.value), e.line); });

    if (!sections.count("model"))
        throw std::invalid_argument("config: missing required section [model]");
    Reader model(sections, "model");
    for (const char* k : {"chi", "a", "b", "lambda", "mu"})
        if (!model.has(k))
            throw std::invalid_argument(std::string("config: [model] missing key '") + k +
                                        "'");
    model.take("chi", [&](Entry& e) { cfg.model.chi = to_double(e, "chi"); });
    model.take("a", [&](Entry& e) { cfg.model.a = to_double(e, "a"); });
    model.take("b", [&](Entry& e) { cfg.model.b = to_double(e, "b"); });
    model.take("lambda", [&](Entry& e) { cfg.model.lambda = to_double(e, "lambda"); });
    model.take("mu", [&](Entry& e) { cfg.model.mu = to_double(e, "mu"); });

    Reader grid(sections, "grid");
    grid.take("half_length",
              [&](Entry& e) { cfg.grid_half_length = to_double(e, "half_length"); });
    grid.take("spacing", [&](Entry& e) { cfg.grid_spacing = to_double(e, "spacing"); });

    Reader solver(sections, "solver");
    solver.take("scheme", [&](Entry& e) {
        const std::string v = trim(e.value);
        if (v == "imex")
            cfg.solver.scheme = Scheme::ImexDiffusionImplicit;
        else if (v == "explicit")
            cfg.solver.scheme = Scheme::ExplicitEuler;
        else
            fail(e.line, "scheme must be imex|explicit, got '" + v + "'");
    });
    solver.take("dt", [&](Entry& e) { cfg.solver.dt = to_double(e, "dt"); });
    solver.take("t_end", [&](Entry& e) { cfg.solver.t_end = to_double(e, "t_end"); });
    solver.take("cfl_safety",
                [&](Entry& e) { cfg.solver.cfl_safety = to_double(e, "cfl_safety"); });
    solver.take("snapshot_stride", [&](Entry& e) {
        cfg.solver.observer_stride = static_cast<int>(to_long(e, "snapshot_stride"));
    });
    solver.take("neg_tolerance",
                [&](Entry& e) { cfg.solver.neg_tolerance = to_double(e, "neg_tolerance"); });
    bool tail_explicit = false;
    solver.take("tail", [&](Entry& e) {
        const std::string v = trim(e.value);
        tail_explicit = true;
        if (v == "auto")
            tail_explicit = false;
        else if (v == "zero")
            cfg.solver.tail = TailPolicy::Zero;
        else if (v == "constant-left")
            cfg.solver.tail = TailPolicy::ConstantLeftZeroRight;
        else if (v == "constant-both")
            cfg.solver.tail = TailPolicy::ConstantBoth;
        else
            fail(e.line, "tail must be auto|zero|constant-left|constant-both");
    });

    Reader initial(sections, "initial");
    initial.take("kind", [&](Entry& e) {
        const std::string v = trim(e.value);
        if (v == "compact")
            cfg.initial.kind = InitialKind::CompactBump;
        else if (v == "front")
            cfg.initial.kind = InitialKind::FrontLike;
        else if (v == "exponential")
            cfg.initial.kind = InitialKind::Exponential;
        else
            fail(e.line, "initial kind must be compact|front|exponential");
    });
    initial.take("height", [&](Entry& e) { cfg.initial.height = to_double(e, "height"); });
    initial.take("width", [&](Entry& e) { cfg.initial.width = to_double(e, "width"); });
    initial.take("center", [&](Entry& e) { cfg.initial.center = to_double(e, "center"); });
    initial.take("level", [&](Entry& e) { cfg.initial.level = to_double(e, "level"); });
    initial.take("interface",
                 [&](Entry& e) { cfg.initial.interface_pos = to_double(e, "interface"); });
    initial.take("ramp", [&](Entry& e) { cfg.initial.ramp_width = to_double(e, "ramp"); });
    initial.take("kappa", [&](Entry& e) { cfg.initial.kappa = to_double(e, "kappa"); });
    initial.take("floor", [&](Entry& e) { cfg.initial.floor_level = to_double(e, "floor"); });

    Reader analysis(sections, "analysis");
    auto take_d = [&](const char* key, double& target) {
        analysis.take(key, [&](Entry& e) { target = to_double(e, key); });
    };
    take_d("theta", cfg.analysis.theta);
    take_d("window_lo", cfg.analysis.window_lo);
    take_d("window_hi", cfg.analysis.window_hi);
    take_d("speed_grid_lo", cfg.analysis.speed_grid_lo);
    take_d("speed_grid_hi", cfg.analysis.speed_grid_hi);
    take_d("speed_grid_step", cfg.analysis.speed_grid_step);
    take_d("epsilon", cfg.analysis.epsilon);
    take_d("ratio_floor", cfg.analysis.ratio_floor);
    take_d("decay_lo", cfg.analysis.decay_lo);
    take_d("decay_hi", cfg.analysis.decay_hi);
    take_d("kappa", cfg.analysis.kappa);
    take_d("envelope_m_factor", cfg.analysis.envelope_m_factor);
    take_d("fp_tol", cfg.analysis.fp_tol);
    take_d("steady_tol", cfg.analysis.steady_tol);
    analysis.take("max_outer", [&](Entry& e) {
        cfg.analysis.max_outer = static_cast<int>(to_long(e, "max_outer"));
    });
    take_d("omega", cfg.analysis.omega);
    analysis.take("scan_speeds",
                  [&](Entry& e) { cfg.analysis.scan_speeds = to_list(e, "scan_speeds"); });
    take_d("expected_speed", cfg.analysis.expected_speed);
    take_d("speed_tol", cfg.analysis.speed_tol);
    take_d("spreading_lo", cfg.analysis.spreading_lo);
    take_d("spreading_hi", cfg.analysis.spreading_hi);
    take_d("behind_c", cfg.analysis.behind_c);
    take_d("behind_time", cfg.analysis.behind_time);
    take_d("behind_tol", cfg.analysis.behind_tol);
    take_d("shape_tol", cfg.analysis.shape_tol);
    take_d("residual_tol", cfg.analysis.residual_tol);
    take_d("tail_dev_tol", cfg.analysis.tail_dev_tol);
    take_d("left_dev_tol", cfg.analysis.left_dev_tol);

    Reader output(sections, "output");
    output.take("directory", [&](Entry& e) { cfg.output.directory = trim(e.value); });
    output.take("write_trajectory",
                [&](Entry& e) { cfg.output.write_trajectory = to_bool(e, "write_trajectory"); });
    output.take("write_fronts",
                [&](Entry& e) { cfg.output.write_fronts = to_bool(e, "write_fronts"); });
    output.take("write_profile",
                [&](Entry& e) { cfg.output.write_profile = to_bool(e, "write_profile"); });

    // strict mode: every key must have been consumed
    for (const auto& [name, entries] : sections)
        for (const auto& [key, entry] : entries)
            if (!entry.used)
                fail(entry.line, "unknown key '" + key + "'" +
                                     (name.empty() ? " at scenario level"
                                                   : " in section [" + name + "]"));

    if (!tail_explicit) {
        cfg.solver.tail = (cfg.initial.kind == InitialKind::CompactBump)
                              ? TailPolicy::Zero
                              : TailPolicy::ConstantLeftZeroRight;
    }
    resolve_defaults(cfg);
    validate_config(cfg);
    return cfg;
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

inline void validate_config(const ScenarioConfig& cfg) {
    const ModelParams& p = cfg.model;
    p.validate();

    const bool needs_dynamics = cfg.kind == ScenarioKind::Simulate ||
                                cfg.kind == ScenarioKind::Speed ||
                                cfg.kind == ScenarioKind::Wave;
    if (needs_dynamics && !global_existence(p)) {
        std::ostringstream msg;
        msg << "config: chi*mu < b required (global existence); got chi*mu = "
            << p.chi * p.mu << ", b = " << p.b;
        throw std::invalid_argument(msg.str());
    }

    if (!(cfg.grid_half_length > 0.0) || !(cfg.grid_spacing > 0.0))
        throw std::invalid_argument("config: [grid] half_length and spacing must be > 0");
    cfg.solver.validate();

    if (!(cfg.analysis.theta > 0.0) || !(cfg.analysis.theta < p.a / p.b))
        throw std::invalid_argument("config: theta must lie in (0, a/b)");

    if (cfg.kind == ScenarioKind::Simulate || cfg.kind == ScenarioKind::Speed) {
        // domain-size policy: the predicted fastest front plus margin must stay
        // out of the boundary buffer for the whole run
        double c_pred, kappa_ref;
        if (cfg.initial.kind == InitialKind::Exponential) {
            kappa_ref = cfg.initial.kappa;
            if (cfg.kind == ScenarioKind::Speed) {
                if (!(kappa_ref < std::sqrt(p.a)))
                    throw std::invalid_argument(
                        "config: exponential initial data for a speed scenario needs "
                        "kappa < sqrt(a)");
                if (!kappa_admissible(p, kappa_ref))
                    throw std::invalid_argument(
                        "config: kappa violates (kappa-sqrt(lambda))+/(kappa+sqrt(lambda))"
                        " <= 2(b-chi*mu)/(chi*mu)");
            }
            c_pred = c_kappa(p, kappa_ref);
        } else {
            const SpeedConstants sc = speed_constants(p);
            c_pred = sc.c_star;
            kappa_ref = sc.a_star;
        }
        const double required = c_pred * cfg.solver.t_end + 20.0 / kappa_ref +
                                boundary_buffer(p);
        if (cfg.grid_half_length < required) {
            std::ostringstream msg;
            msg << "config: domain too small: the predicted front (speed " << c_pred
                << ") needs half_length >= " << required << ", got "
                << cfg.grid_half_length;
            throw std::invalid_argument(msg.str());
        }
    }

    if (cfg.kind == ScenarioKind::Wave) {
        const double km = std::min(std::sqrt(p.a), std::sqrt(p.lambda));
        if (cfg.analysis.scan_speeds.empty()) {
            if (!(cfg.analysis.kappa > 0.0) || !(cfg.analysis.kappa < km))
                throw std::invalid_argument(
                    "config: wave scenarios need 0 < kappa < min(sqrt(a), sqrt(lambda))");
            if (cfg.grid_half_length < 40.0 / cfg.analysis.kappa)
                throw std::invalid_argument(
                    "config: wave grid needs half_length >= 40/kappa to resolve both tails");
        }
    }

    if (cfg.kind == ScenarioKind::Sweep) {
        static const std::vector<std::string> ok = {"chi", "a", "b", "lambda", "mu"};
        if (std::find(ok.begin(), ok.end(), cfg.sweep_param) == ok.end())
            throw std::invalid_argument(
                "config: sweep_param must be one of chi|a|b|lambda|mu");
        if (cfg.sweep_values.empty())
            throw std::invalid_argument("config: sweep_values must be a nonempty list");
        if (cfg.sweep_kind == ScenarioKind::Sweep ||
            cfg.sweep_kind == ScenarioKind::KernelSelftest)
            throw std::invalid_argument("config: sweep_kind must be simulate|speed|wave");
    }
}

// ---------------------------------------------------------------------------
// echo
// ---------------------------------------------------------------------------

inline std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto d = [](double v) { return format_double(v); };
    out << "kind = " << to_string(cfg.kind) << "\n";
    out << "seed = " << cfg.seed << "\n";
    if (cfg.kind == ScenarioKind::Sweep) {
        out << "sweep_param = " << cfg.sweep_param << "\n";
        out << "sweep_values = ";
        for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i)
            out << (i ? "," : "") << d(cfg.sweep_values[i]);
        out << "\n";
        out << "sweep_kind = " << to_string(cfg.sweep_kind) << "\n";
    }
    out << "\n[model]\n";
    out << "chi = " << d(cfg.model.chi) << "\n";
    out << "a = " << d(cfg.model.a) << "\n";
    out << "b = " << d(cfg.model.b) << "\n";
    out << "lambda = " << d(cfg.model.lambda) << "\n";
    out << "mu = " << d(cfg.model.mu) << "\n";
    out << "\n[grid]\n";
    out << "half_length = " << d(cfg.grid_half_length) << "\n";
    out << "spacing = " << d(cfg.grid_spacing) << "\n";
    out << "\n[solver]\n";
    out << "scheme = "
        << (cfg.solver.scheme == Scheme::ImexDiffusionImplicit ? "imex" : "explicit")
        << "\n";
    out << "dt = " << d(cfg.solver.dt) << "\n";
    out << "t_end = " << d(cfg.solver.t_end) << "\n";
    out << "cfl_safety = " << d(cfg.solver.cfl_safety) << "\n";
    out << "snapshot_stride = " << cfg.solver.observer_stride << "\n";
    out << "neg_tolerance = " << d(cfg.solver.neg_tolerance) << "\n";
    out << "tail = "
        << (cfg.solver.tail == TailPolicy::Zero
                ? "zero"
                : cfg.solver.tail == TailPolicy::ConstantLeftZeroRight
                      ? "constant-left"
                      : "constant-both")
        << "\n";
    out << "\n[initial]\n";
    switch (cfg.initial.kind) {
        case InitialKind::CompactBump:
            out << "kind = compact\n";
            out << "height = " << d(cfg.initial.height) << "\n";
            out << "width = " << d(cfg.initial.width) << "\n";
            out << "center = " << d(cfg.initial.center) << "\n";
            break;
        case InitialKind::FrontLike:
            out << "kind = front\n";
            out << "level = " << d(cfg.initial.level) << "\n";
            out << "interface = " << d(cfg.initial.interface_pos) << "\n";
            out << "ramp = " << d(cfg.initial.ramp_width) << "\n";
            break;
        case InitialKind::Exponential:
            out << "kind = exponential\n";
            out << "kappa = " << d(cfg.initial.kappa) << "\n";
            out << "floor = " << d(cfg.initial.floor_level) << "\n";
            break;
    }
    out << "\n[analysis]\n";
    out << "theta = " << d(cfg.analysis.theta) << "\n";
    out << "window_lo = " << d(cfg.analysis.window_lo) << "\n";
    out << "window_hi = " << d(cfg.analysis.window_hi) << "\n";
    out << "speed_grid_lo = " << d(cfg.analysis.speed_grid_lo) << "\n";
    out << "speed_grid_hi = " << d(cfg.analysis.speed_grid_hi) << "\n";
    out << "speed_grid_step = " << d(cfg.analysis.speed_grid_step) << "\n";
    out << "epsilon = " << d(cfg.analysis.epsilon) << "\n";
    out << "ratio_floor = " << d(cfg.analysis.ratio_floor) << "\n";
    out << "decay_lo = " << d(cfg.analysis.decay_lo) << "\n";
    out << "decay_hi = " << d(cfg.analysis.decay_hi) << "\n";
    out << "kappa = " << d(cfg.analysis.kappa) << "\n";
    out << "envelope_m_factor = " << d(cfg.analysis.envelope_m_factor) << "\n";
    out << "fp_tol = " << d(cfg.analysis.fp_tol) << "\n";
    out << "steady_tol = " << d(cfg.analysis.steady_tol) << "\n";
    out << "max_outer = " << cfg.analysis.max_outer << "\n";
    out << "omega = " << d(cfg.analysis.omega) << "\n";
    if (!cfg.analysis.scan_speeds.empty()) {
        out << "scan_speeds = ";
        for (std::size_t i = 0; i < cfg.analysis.scan_speeds.size(); ++i)
            out << (i ? "," : "") << d(cfg.analysis.scan_speeds[i]);
        out << "\n";
    }
    auto opt = [&](const char* key, double v) {
        if (!std::isnan(v)) out << key << " = " << d(v) << "\n";
    };
    opt("expected_speed", cfg.analysis.expected_speed);
    if (!std::isnan(cfg.analysis.expected_speed))
        out << "speed_tol = " << d(cfg.analysis.speed_tol) << "\n";
    opt("spreading_lo", cfg.analysis.spreading_lo);
    opt("spreading_hi", cfg.analysis.spreading_hi);
    opt("behind_c", cfg.analysis.behind_c);
    opt("behind_time", cfg.analysis.behind_time);
    if (!std::isnan(cfg.analysis.behind_c))
        out << "behind_tol = " << d(cfg.analysis.behind_tol) << "\n";
    opt("shape_tol", cfg.analysis.shape_tol);
    opt("residual_tol", cfg.analysis.residual_tol);
    opt("tail_dev_tol", cfg.analysis.tail_dev_tol);
    opt("left_dev_tol", cfg.analysis.left_dev_tol);
    out << "\n[output]\n";
    out << "directory = " << cfg.output.directory << "\n";
    out << "write_trajectory = " << (cfg.output.write_trajectory ? "true" : "false") << "\n";
    out << "write_fronts = " << (cfg.output.write_fronts ? "true" : "false") << "\n";
    out << "write_profile = " << (cfg.output.write_profile ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace chemfront

#endif  // CHEMFRONT_CONFIG_HPP
