// Command-line front end: scenario loading, trajectory and sweep CSVs, and
// the self-check recipe.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "radcool/active_law.hpp"
#include "radcool/analysis.hpp"
#include "radcool/approximations.hpp"
#include "radcool/csv.hpp"
#include "radcool/errors.hpp"
#include "radcool/exact_law.hpp"
#include "radcool/oracle.hpp"
#include "radcool/scenario_io.hpp"
#include "radcool/selftest.hpp"

namespace {

using namespace radcool;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& value, char sep) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

// lo:hi:steps with an optional :log|:lin suffix.
std::vector<double> parse_grid(const std::string& text, bool default_log) {
    const auto parts = split_list(text, ':');
    if (parts.size() < 3 || parts.size() > 4) {
        throw CliError("grid expects lo:hi:steps[:log|lin], got '" + text + "'");
    }
    const double lo = std::stod(parts[0]);
    const double hi = std::stod(parts[1]);
    const int steps = std::stoi(parts[2]);
    bool log_scale = default_log;
    if (parts.size() == 4) {
        if (parts[3] == "log") log_scale = true;
        else if (parts[3] == "lin") log_scale = false;
        else throw CliError("grid scale must be log or lin");
    }
    if (steps < 1) throw CliError("grid needs at least one step");
    if (log_scale && !(lo > 0.0 && hi > 0.0)) {
        throw CliError("log grid needs positive endpoints");
    }
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i) {
        const double f = steps == 1 ? 0.0 : double(i) / (steps - 1);
        grid.push_back(log_scale ? lo * std::pow(hi / lo, f)
                                 : lo + (hi - lo) * f);
    }
    return grid;
}

struct CommonFlags {
    std::string scenario_path;
    std::string out_path;
    std::string t_end = "auto";
    std::vector<std::string> sets;
    int samples = 200;
    double rel_tol = 1e-9;
    bool allow_negative_h = false;
};

ScenarioFile load_file(const CommonFlags& flags) {
    KeyValueOverrides overrides;
    for (const auto& s : flags.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw CliError("--set expects key=value, got '" + s + "'");
        }
        overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    return load_scenario(flags.scenario_path, overrides,
                         flags.allow_negative_h ? NegativeH::allow
                                                : NegativeH::reject);
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw CliError("cannot open --out file " + path);
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

// Equilibrium of the full rate function by bracketed bisection; used for
// horizons when no closed form exists (exponential sources).
double equilibrium_estimate(const ThermalScenario& scn) {
    const double t0 = scn.initial.kelvin();
    const double f0 = rate_of_change(scn, scn.initial);
    if (f0 == 0.0) return t0;
    const double dir = f0 > 0.0 ? 1.0 : -1.0;
    double prev = t0, next = t0;
    for (int i = 0; i < 4000; ++i) {
        prev = next;
        next += dir * 0.25;
        if (next < 1.0) throw NeverReached("equilibrium estimate left T > 0");
        const double f = rate_of_change(scn, Temperature::from_kelvin(next));
        if ((f > 0.0) != (f0 > 0.0) || f == 0.0) {
            double lo = prev, hi = next;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm =
                    rate_of_change(scn, Temperature::from_kelvin(mid));
                if ((fm > 0.0) == (f0 > 0.0)) lo = mid; else hi = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    throw NeverReached("equilibrium estimate: no sign change within 1000 K");
}

double auto_t_end(const ThermalScenario& scn) {
    try {
        return t99(build_exact_law(scn));
    } catch (const NonPolynomialSource&) {
        const double te = equilibrium_estimate(scn);
        const double target =
            scn.initial.kelvin() + 0.99 * (te - scn.initial.kelvin());
        return crossing_time(scn, Temperature::from_kelvin(target), 1e-9);
    } catch (const DegenerateRadiation&) {
        return t99(build_active_law(scn));
    }
}

double resolve_t_end(const std::string& t_end, const ThermalScenario& scn) {
    if (t_end == "auto") return auto_t_end(scn);
    const double value = std::stod(t_end);
    if (!(value > 0.0)) throw CliError("--t-end must be positive or 'auto'");
    return value;
}

// A law by name, as a T(t) functional (kelvin in, kelvin out).
std::function<double(double)> law_by_name(const std::string& name,
                                          const ThermalScenario& scn,
                                          double t_horizon, double rel_tol) {
    if (name == "exact") {
        const ExactLaw law = build_exact_law(scn);
        return [law](double t) {
            return temperature_at_time(law, t).temperature.kelvin();
        };
    }
    if (name == "active") {
        const ActiveLaw law = build_active_law(scn);
        return [law](double t) { return active_temperature(law, t).kelvin(); };
    }
    if (name == "coefficient") {
        const auto fit = fit_radiation_quadratic(scn.temp_range,
                                                 RadiationFitMode::fixed_constants);
        const QuadraticLaw law = build_quadratic_law(scn, fit);
        return [law](double t) { return quadratic_temperature(law, t).kelvin(); };
    }
    if (name == "osullivan1") {
        return [scn](double t) { return osullivan1_temperature(scn, t).kelvin(); };
    }
    if (name == "osullivan2") {
        return [scn](double t) { return osullivan2_temperature(scn, t).kelvin(); };
    }
    if (name == "oracle") {
        const TimeSeries series = integrate(scn, t_horizon, rel_tol);
        return [series](double t) { return series.temperature_at(t); };
    }
    throw CliError("unknown law '" + name +
                   "' (exact, active, coefficient, osullivan1, osullivan2, "
                   "oracle)");
}

int run_trace(const ScenarioFile& file, const CommonFlags& flags,
              const std::string& law_name) {
    const double horizon = resolve_t_end(flags.t_end, file.scenario);
    const auto law = law_by_name(law_name, file.scenario, horizon, flags.rel_tol);
    OutputTarget target(flags.out_path);
    target.out() << "t_s,T_c\n";
    for (int i = 0; i < flags.samples; ++i) {
        const double t =
            flags.samples == 1 ? 0.0 : horizon * i / (flags.samples - 1);
        target.out() << csv_number(t) << ','
                     << csv_number(law(t) - constants::celsius_offset) << '\n';
    }
    return 0;
}

int run_invert(const ScenarioFile& file, const CommonFlags& flags) {
    const ExactLaw law = build_exact_law(file.scenario);
    const double t0 = law.initial.kelvin();
    const double te = law.equilibrium.kelvin();
    OutputTarget target(flags.out_path);
    target.out() << "T_c,t_s\n";
    for (int i = 0; i < flags.samples; ++i) {
        const double frac =
            flags.samples == 1 ? 0.0 : 0.99 * i / (flags.samples - 1);
        const double temp = t0 + frac * (te - t0);
        const double t = time_of_temperature(law, Temperature::from_kelvin(temp));
        target.out() << csv_number(temp - constants::celsius_offset) << ','
                     << csv_number(t) << '\n';
    }
    return 0;
}

int run_compare(const ScenarioFile& file, const CommonFlags& flags,
                const std::string& laws_text) {
    const double horizon = resolve_t_end(flags.t_end, file.scenario);
    const auto names = split_list(laws_text, ',');
    if (names.empty()) throw CliError("--laws needs at least one law");
    std::vector<std::function<double(double)>> laws;
    laws.reserve(names.size());
    for (const auto& name : names) {
        laws.push_back(law_by_name(name, file.scenario, horizon, flags.rel_tol));
    }
    OutputTarget target(flags.out_path);
    target.out() << "t_s";
    for (const auto& name : names) target.out() << ",T_" << name << "_c";
    target.out() << '\n';
    for (int i = 0; i < flags.samples; ++i) {
        const double t =
            flags.samples == 1 ? 0.0 : horizon * i / (flags.samples - 1);
        target.out() << csv_number(t);
        for (const auto& law : laws) {
            target.out() << ',' << csv_number(law(t) - constants::celsius_offset);
        }
        target.out() << '\n';
    }
    return 0;
}

int run_rmse(const ScenarioFile& file, const CommonFlags& flags,
             const std::string& laws_text, int n_samples) {
    const ExactLaw law = build_exact_law(file.scenario);
    std::vector<ApproximationKind> kinds;
    if (laws_text.empty()) {
        kinds = {ApproximationKind::coefficient, ApproximationKind::osullivan1,
                 ApproximationKind::osullivan2,
                 ApproximationKind::exponential_active};
    } else {
        for (const auto& name : split_list(laws_text, ',')) {
            if (name == "coefficient") {
                kinds.push_back(ApproximationKind::coefficient);
            } else if (name == "osullivan1") {
                kinds.push_back(ApproximationKind::osullivan1);
            } else if (name == "osullivan2") {
                kinds.push_back(ApproximationKind::osullivan2);
            } else if (name == "active" || name == "exponential-active") {
                kinds.push_back(ApproximationKind::exponential_active);
            } else {
                throw CliError("unknown approximation '" + name + "'");
            }
        }
    }
    OutputTarget target(flags.out_path);
    target.out() << "approximation,rmse_k,n,window_end_s\n";
    for (const auto kind : kinds) {
        const RmseReport report = rmse(law, kind, file.scenario,
                                       CoefficientFit::fixed_constants,
                                       n_samples);
        target.out() << to_string(kind) << ',' << csv_number(report.rmse) << ','
                     << report.n << ',' << csv_number(report.window_end) << '\n';
    }
    return 0;
}

int run_sweep(Metric metric, const std::string& s_grid_text,
              const std::string& te_grid_text, const std::string& ihg,
              const std::string& direction, const std::string& out_path,
              const std::string& metric_override) {
    if (!metric_override.empty()) {
        if (metric_override == "rcr") metric = Metric::rcr;
        else if (metric_override == "delta_tau" || metric_override == "dtau")
            metric = Metric::delta_tau;
        else throw CliError("unknown --metric '" + metric_override + "'");
    }
    SweepSpec spec;
    spec.metric = metric;
    spec.surface_grid = parse_grid(s_grid_text, true);
    for (const double te_c : parse_grid(te_grid_text, false)) {
        spec.te_grid.push_back(Temperature::from_celsius(te_c));
    }
    if (ihg == "min") spec.ihg = IhgLevel::min;
    else if (ihg == "max") spec.ihg = IhgLevel::max;
    else throw CliError("--ihg must be min or max");
    if (direction == "heating") spec.direction = Direction::heating;
    else if (direction == "cooling") spec.direction = Direction::cooling;
    else throw CliError("--direction must be heating or cooling");

    const auto rows = sweep(spec);
    OutputTarget target(out_path);
    if (metric == Metric::rcr) {
        target.out() << "S_m2,Te_c,rcr,h_negative,error\n";
    } else {
        target.out() << "S_m2,Te_c,direction,delta_tau,h_negative,error\n";
    }
    for (const auto& row : rows) {
        target.out() << csv_number(row.surface_m2) << ','
                     << csv_number(row.te.celsius()) << ',';
        if (metric == Metric::delta_tau) {
            target.out() << to_string(row.direction) << ',';
        }
        target.out() << (row.error.empty() ? csv_number(row.value) : "nan")
                     << ',' << (row.h_negative ? 1 : 0) << ',' << row.error
                     << '\n';
    }
    return 0;
}

int run_oracle(const ScenarioFile& file, const CommonFlags& flags) {
    const double horizon = resolve_t_end(flags.t_end, file.scenario);
    const TimeSeries series = integrate(file.scenario, horizon, flags.rel_tol);
    OutputTarget target(flags.out_path);
    write_csv(series, target.out());
    return 0;
}

int run_check() {
    const auto results = run_acceptance_checks();
    std::cout << format_acceptance_report(results);
    for (const auto& r : results) {
        if (!r.pass) return 1;
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--scenario", flags.scenario_path, "scenario file")
        ->required();
    cmd->add_option("--set", flags.sets,
                    "override scenario keys (key=value, repeatable)");
    cmd->add_flag("--allow-negative-h", flags.allow_negative_h,
                  "accept scenarios whose passive h is negative");
    cmd->add_option("--out", flags.out_path, "write CSV here instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"passive-cooling law toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string law_name = "exact";
    std::string laws_text = "exact,active";
    std::string rmse_laws;
    int rmse_samples = 500;
    std::string s_grid = "1e-4:6e-2:25:log";
    std::string te_grid = "25:85:13";
    std::string ihg = "max";
    std::string direction = "heating";
    std::string metric_override;
    std::string sweep_out;

    auto* trace = app.add_subcommand("trace", "sample one law as t,T CSV");
    add_common(trace, flags);
    trace->add_option("--law", law_name,
                      "exact|active|coefficient|osullivan1|osullivan2|oracle");
    trace->add_option("--t-end", flags.t_end, "horizon seconds or 'auto' (t99)");
    trace->add_option("--samples", flags.samples, "row count");
    trace->add_option("--rel-tol", flags.rel_tol, "oracle tolerance");

    auto* invert = app.add_subcommand("invert", "sample the exact law as T,t CSV");
    add_common(invert, flags);
    invert->add_option("--samples", flags.samples, "row count");

    auto* compare = app.add_subcommand("compare", "several laws side by side");
    add_common(compare, flags);
    compare->add_option("--laws,--law", laws_text, "comma-separated law names");
    compare->add_option("--t-end", flags.t_end, "horizon seconds or 'auto'");
    compare->add_option("--samples", flags.samples, "row count");
    compare->add_option("--rel-tol", flags.rel_tol, "oracle tolerance");

    auto* rmse_cmd = app.add_subcommand("rmse", "approximation error report");
    add_common(rmse_cmd, flags);
    rmse_cmd->add_option("--laws,--law", rmse_laws, "approximations (default: all)");
    rmse_cmd->add_option("--samples", rmse_samples, "RMSE sample count");

    auto* rcr_sweep = app.add_subcommand("rcr-sweep", "h_pc/h_ac ratio grid");
    rcr_sweep->add_option("--s-grid", s_grid, "lo:hi:steps[:log|lin], m^2");
    rcr_sweep->add_option("--te-grid", te_grid, "lo:hi:steps, degC");
    rcr_sweep->add_option("--ihg", ihg, "min|max");
    rcr_sweep->add_option("--metric", metric_override, "metric override");
    rcr_sweep->add_option("--out", sweep_out, "output file");

    auto* dtau_sweep = app.add_subcommand("dtau-sweep", "relative lag grid");
    dtau_sweep->add_option("--s-grid", s_grid, "lo:hi:steps[:log|lin], m^2");
    dtau_sweep->add_option("--te-grid", te_grid, "lo:hi:steps, degC");
    dtau_sweep->add_option("--ihg", ihg, "min|max");
    dtau_sweep->add_option("--direction", direction, "heating|cooling");
    dtau_sweep->add_option("--metric", metric_override, "metric override");
    dtau_sweep->add_option("--out", sweep_out, "output file");

    auto* oracle_cmd = app.add_subcommand("oracle", "raw ODE reference series");
    add_common(oracle_cmd, flags);
    oracle_cmd->add_option("--t-end", flags.t_end, "horizon seconds or 'auto'");
    oracle_cmd->add_option("--rel-tol", flags.rel_tol, "tolerance in [1e-12,1e-3]");

    auto* check = app.add_subcommand("check", "run the verification grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    bool input_phase = true;
    try {
        if (check->parsed()) {
            input_phase = false;
            return run_check();
        }
        if (rcr_sweep->parsed()) {
            // Grid parsing is input; the sweep itself records per-point errors.
            input_phase = false;
            return run_sweep(Metric::rcr, s_grid, te_grid, ihg, direction,
                             sweep_out, metric_override);
        }
        if (dtau_sweep->parsed()) {
            input_phase = false;
            return run_sweep(Metric::delta_tau, s_grid, te_grid, ihg, direction,
                             sweep_out, metric_override);
        }

        const ScenarioFile file = load_file(flags);
        input_phase = false;
        if (trace->parsed()) return run_trace(file, flags, law_name);
        if (invert->parsed()) return run_invert(file, flags);
        if (compare->parsed()) return run_compare(file, flags, laws_text);
        if (rmse_cmd->parsed()) return run_rmse(file, flags, rmse_laws, rmse_samples);
        if (oracle_cmd->parsed()) return run_oracle(file, flags);
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return input_phase ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: InvalidInput: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
