#include "radcool/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "radcool/errors.hpp"

namespace radcool {

void validate(const ScenarioSpec& spec) {
    if (!(spec.surface_m2 > 0.0) || !std::isfinite(spec.surface_m2)) {
        throw std::invalid_argument("ScenarioSpec: surface must be > 0");
    }
    if (!(spec.heat_capacity > 0.0) || !std::isfinite(spec.heat_capacity)) {
        throw std::invalid_argument("ScenarioSpec: heat capacity must be > 0");
    }
    if (!(spec.emissivity >= 0.0 && spec.emissivity <= 1.0)) {
        throw std::invalid_argument("ScenarioSpec: emissivity must be in [0, 1]");
    }
    if (!(spec.temp_range.lo.kelvin() < spec.temp_range.hi.kelvin())) {
        throw std::invalid_argument("ScenarioSpec: temp_range lo must be < hi");
    }
    if (!spec.temp_range.contains(spec.initial)) {
        throw std::invalid_argument(
            "ScenarioSpec: initial temperature outside declared range");
    }
    // The source must not consume heat anywhere in the declared range.
    constexpr int n_scan = 257;
    for (int i = 0; i < n_scan; ++i) {
        const double t_k = spec.temp_range.lo.kelvin() +
                           spec.temp_range.width() * i / (n_scan - 1);
        const double h = heat_rate(spec.source, Temperature::from_kelvin(t_k));
        if (!(h >= 0.0)) {
            throw std::invalid_argument(
                "ScenarioSpec: heat source negative at " +
                std::to_string(t_k) + " K");
        }
    }
}

ThermalScenario with_h(const ScenarioSpec& spec, double h, NegativeH policy) {
    validate(spec);
    if (!std::isfinite(h)) {
        throw std::invalid_argument("with_h: h must be finite");
    }
    if (h < 0.0 && policy == NegativeH::reject) {
        throw std::invalid_argument(
            "with_h: negative convective coefficient refused (pass "
            "NegativeH::allow to accept)");
    }
    ThermalScenario scn;
    static_cast<ScenarioSpec&>(scn) = spec;
    scn.h = h;
    return scn;
}

double h_from_equilibrium_active(const ScenarioSpec& spec, Temperature t_e) {
    validate(spec);
    const auto* linear = std::get_if<LinearSource>(&spec.source);
    if (linear == nullptr) {
        throw NonPolynomialSource(
            "h_from_equilibrium_active: active law requires a linear source");
    }
    const double dt = t_e - spec.ambient;
    if (!(dt > 0.0)) {
        throw EquilibriumBelowAmbient(
            "h_from_equilibrium_active: equilibrium must exceed ambient");
    }
    const double h = heat_rate(spec.source, t_e) / (spec.surface_m2 * dt);
    const double eta1 = to_kelvin_basis(*linear).eta1;
    if (!(h > eta1 / spec.surface_m2)) {
        throw UnstableSystem(
            "h_from_equilibrium_active: h*S <= eta1, heat generation outruns "
            "convection");
    }
    return h;
}

PassiveH h_from_equilibrium_passive(const ScenarioSpec& spec, Temperature t_e) {
    validate(spec);
    const double dt = t_e - spec.ambient;
    if (!(dt > 0.0)) {
        throw EquilibriumBelowAmbient(
            "h_from_equilibrium_passive: equilibrium must exceed ambient");
    }
    const double ta4 = std::pow(spec.ambient.kelvin(), 4);
    const double te4 = std::pow(t_e.kelvin(), 4);
    const double radiative = spec.emissivity * constants::stefan_boltzmann *
                             spec.surface_m2 * (ta4 - te4);
    const double h =
        (heat_rate(spec.source, t_e) + radiative) / (spec.surface_m2 * dt);
    return PassiveH{h, h < 0.0};
}

ThermalScenario with_equilibrium_passive(const ScenarioSpec& spec,
                                         Temperature t_e, NegativeH policy) {
    return with_h(spec, h_from_equilibrium_passive(spec, t_e).value, policy);
}

} // namespace radcool
