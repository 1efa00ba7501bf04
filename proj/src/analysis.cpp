#include "radcool/analysis.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "radcool/active_law.hpp"
#include "radcool/approximations.hpp"
#include "radcool/errors.hpp"
#include "radcool/oracle.hpp"

namespace radcool {

const char* to_string(ApproximationKind kind) {
    switch (kind) {
        case ApproximationKind::coefficient: return "coefficient";
        case ApproximationKind::osullivan1: return "osullivan1";
        case ApproximationKind::osullivan2: return "osullivan2";
        case ApproximationKind::exponential_active: return "exponential-active";
    }
    return "?";
}

const char* to_string(Direction direction) {
    return direction == Direction::heating ? "heating" : "cooling";
}

RmseReport rmse(const ExactLaw& reference, ApproximationKind candidate,
                const ThermalScenario& scn, CoefficientFit fit, int n) {
    if (n < 2) throw std::invalid_argument("rmse: need at least two samples");

    std::function<double(double)> approx;
    switch (candidate) {
        case ApproximationKind::coefficient: {
            const auto mode = fit == CoefficientFit::fixed_constants
                                  ? RadiationFitMode::fixed_constants
                                  : RadiationFitMode::dynamic;
            const auto rad_fit = fit_radiation_quadratic(scn.temp_range, mode);
            const QuadraticLaw law = build_quadratic_law(scn, rad_fit);
            approx = [law](double t) {
                return quadratic_temperature(law, t).kelvin();
            };
            break;
        }
        case ApproximationKind::osullivan1:
            approx = [&scn](double t) {
                return osullivan1_temperature(scn, t).kelvin();
            };
            break;
        case ApproximationKind::osullivan2:
            approx = [&scn](double t) {
                return osullivan2_temperature(scn, t).kelvin();
            };
            break;
        case ApproximationKind::exponential_active: {
            const ActiveLaw law = build_active_law(scn);
            approx = [law](double t) {
                return active_temperature(law, t).kelvin();
            };
            break;
        }
    }

    RmseReport report;
    report.approximation = candidate;
    report.n = n;
    report.window_end = t99(reference);

    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = report.window_end * i / (n - 1);
        const double phi = temperature_at_time(reference, t).temperature.kelvin();
        const double psi = approx(t);
        sum_sq += (phi - psi) * (phi - psi);
    }
    report.rmse = std::sqrt(sum_sq / n);
    return report;
}

double rcr(const ScenarioSpec& spec, Temperature t_e) {
    const double h_te = heat_rate(spec.source, t_e);
    if (!(h_te > 0.0)) {
        throw ZeroHeatSource("rcr: heat source vanishes at the equilibrium");
    }
    const double ta4 = std::pow(spec.ambient.kelvin(), 4);
    const double te4 = std::pow(t_e.kelvin(), 4);
    const double radiative = spec.emissivity * constants::stefan_boltzmann *
                             spec.surface_m2 * (ta4 - te4);
    return (radiative + h_te) / h_te;
}

DeltaTauResult delta_tau(const ScenarioSpec& spec, Temperature t_e,
                         Direction direction, double rel_tol) {
    const double t0 = spec.initial.kelvin();
    const double te = t_e.kelvin();
    const double swing = te - t0;
    if (std::abs(swing) < 1e-9) {
        throw DegenerateRange("delta_tau: Te equals T0");
    }
    if ((direction == Direction::heating) != (swing > 0.0)) {
        throw std::invalid_argument(
            "delta_tau: direction inconsistent with Te vs T0");
    }

    const PassiveH hpc = h_from_equilibrium_passive(spec, t_e);
    const ThermalScenario passive = with_h(spec, hpc.value, NegativeH::allow);

    // The equilibrium must attract, or the passive body stalls short of the
    // reference temperature.
    const double ess = spec.emissivity * constants::stefan_boltzmann *
                       spec.surface_m2;
    const double stability = -4.0 * ess * te * te * te -
                             hpc.value * spec.surface_m2 +
                             heat_rate_slope(spec.source, t_e);
    if (!(stability < 0.0)) {
        throw UnstableEquilibrium(
            "delta_tau: heat generation slope exceeds dissipation at Te");
    }

    // Active baseline: tangent linearization at Te keeps H(Te), so both
    // trajectories share the equilibrium.
    const LinearSource tangent = linearize_at(spec.source, t_e);
    const double h_ac =
        heat_rate(spec.source, t_e) / (spec.surface_m2 * (te - spec.ambient.kelvin()));
    const ActiveLaw active =
        make_active_law(h_ac, spec.surface_m2, spec.heat_capacity, spec.ambient,
                        spec.initial, tangent);

    const Temperature t_pc =
        Temperature::from_kelvin(t0 + 0.85 * swing);

    double t_star = 0.0;
    if (std::holds_alternative<ExponentialSource>(spec.source)) {
        t_star = crossing_time(passive, t_pc, rel_tol);
    } else {
        const ExactLaw law = build_exact_law(passive);
        t_star = time_of_temperature(law, t_pc);
    }

    const double t_ac = active_temperature(active, t_star).kelvin();
    DeltaTauResult result;
    result.value = std::abs(t_pc.kelvin() - t_ac) / std::abs(swing);
    result.h_negative = hpc.negative;
    return result;
}

std::vector<ComparisonRow> sweep(const SweepSpec& sweep_spec) {
    std::vector<ComparisonRow> rows;
    rows.reserve(sweep_spec.surface_grid.size() * sweep_spec.te_grid.size());

    for (const double s : sweep_spec.surface_grid) {
        for (const Temperature te : sweep_spec.te_grid) {
            ComparisonRow row;
            row.surface_m2 = s;
            row.te = te;
            row.direction = sweep_spec.direction;
            row.metric = sweep_spec.metric;
            row.value = std::numeric_limits<double>::quiet_NaN();
            try {
                const ScenarioSpec spec = presets::comparison_spec(
                    s, sweep_spec.ihg, sweep_spec.direction);
                if (sweep_spec.metric == Metric::rcr) {
                    row.value = rcr(spec, te);
                    row.h_negative =
                        h_from_equilibrium_passive(spec, te).negative;
                } else {
                    const DeltaTauResult r =
                        delta_tau(spec, te, sweep_spec.direction);
                    row.value = r.value;
                    row.h_negative = r.h_negative;
                }
            } catch (const Error& e) {
                row.error = e.name();
            } catch (const std::exception&) {
                row.error = "InvalidInput";
            }
            rows.push_back(row);
        }
    }
    return rows;
}

namespace presets {

Temperature ambient() { return Temperature::from_celsius(20.0); }

double emissivity() { return 0.94; }

LinearSource linear_reference_source() {
    return LinearSource{9.407e-3, 1.318, TempBasis::kelvin};
}

ExponentialSource exponential_ihg(IhgLevel level) {
    if (level == IhgLevel::min) {
        return ExponentialSource{0.396, 29.015, 82.738, TempBasis::celsius};
    }
    return ExponentialSource{4.030, 32.010, 149.797, TempBasis::celsius};
}

double slab_heat_capacity(double surface_m2) {
    // 2 mm slab; volumetric heat capacity of silica-like material.
    return surface_m2 * 0.002 * 1548709.0;
}

namespace {

ScenarioSpec validation_spec(Temperature initial) {
    ScenarioSpec spec;
    spec.surface_m2 = 0.01;
    spec.emissivity = emissivity();
    spec.heat_capacity = slab_heat_capacity(spec.surface_m2);
    spec.ambient = ambient();
    spec.initial = initial;
    spec.source = linear_reference_source();
    spec.temp_range = make_range(Temperature::from_celsius(20.0),
                                 Temperature::from_celsius(65.0));
    return spec;
}

} // namespace

ThermalScenario validation_heating() {
    return with_equilibrium_passive(validation_spec(Temperature::from_celsius(25.0)),
                                    Temperature::from_celsius(45.0));
}

ThermalScenario validation_cooling() {
    return with_equilibrium_passive(validation_spec(Temperature::from_celsius(45.0)),
                                    Temperature::from_celsius(25.0));
}

ScenarioSpec comparison_spec(double surface_m2, IhgLevel level,
                             Direction direction) {
    ScenarioSpec spec;
    spec.surface_m2 = surface_m2;
    spec.emissivity = emissivity();
    spec.heat_capacity = slab_heat_capacity(surface_m2);
    spec.ambient = ambient();
    spec.initial = direction == Direction::heating
                       ? Temperature::from_celsius(25.0)
                       : Temperature::from_celsius(55.0);
    spec.source = exponential_ihg(level);
    spec.temp_range = make_range(Temperature::from_celsius(15.0),
                                 Temperature::from_celsius(95.0));
    return spec;
}

ScenarioSpec comparison_spec_linear(double surface_m2, Direction direction) {
    ScenarioSpec spec = comparison_spec(surface_m2, IhgLevel::min, direction);
    spec.source = linear_reference_source();
    spec.temp_range = make_range(Temperature::from_celsius(20.0),
                                 Temperature::from_celsius(65.0));
    return spec;
}

} // namespace presets

} // namespace radcool
