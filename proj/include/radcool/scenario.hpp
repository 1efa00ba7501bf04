#ifndef RADCOOL_SCENARIO_HPP
#define RADCOOL_SCENARIO_HPP

#include "radcool/heat_source.hpp"
#include "radcool/units.hpp"

namespace radcool {

// Physical description of a body before the convective coefficient is known.
struct ScenarioSpec {
    double surface_m2 = 0.0;      // S > 0
    double emissivity = 0.0;      // epsilon in [0, 1]
    double heat_capacity = 0.0;   // C [J/K] > 0
    Temperature ambient;          // T_a (also the fluid temperature T_m)
    Temperature initial;          // T_0, inside temp_range
    HeatSourceModel source;
    TempRange temp_range{Temperature::from_celsius(0), Temperature::from_celsius(100)};
};

// Throws std::invalid_argument when an invariant is broken
// (S > 0, C > 0, 0 <= eps <= 1, lo < hi, T_0 in range, H >= 0 on range).
void validate(const ScenarioSpec& spec);

// A complete scenario: spec plus the convective heat transfer coefficient.
struct ThermalScenario : ScenarioSpec {
    double h = 0.0; // W/(m^2*K); negative only when explicitly allowed
};

enum class NegativeH { reject, allow };

// Attaches h to a validated spec. Negative h is refused unless allowed.
ThermalScenario with_h(const ScenarioSpec& spec, double h,
                       NegativeH policy = NegativeH::reject);

// h for an actively cooled body in equilibrium at t_e (no radiation).
// Requires a linear source. Throws EquilibriumBelowAmbient, UnstableSystem.
double h_from_equilibrium_active(const ScenarioSpec& spec, Temperature t_e);

// h for a passively cooled body (radiation + convection) in equilibrium at
// t_e. The coefficient can come out negative when radiation alone overcools;
// the flag carries that warning to callers.
struct PassiveH {
    double value = 0.0;
    bool negative = false;
};
PassiveH h_from_equilibrium_passive(const ScenarioSpec& spec, Temperature t_e);

// Convenience: spec -> scenario with h solved from the passive equilibrium.
ThermalScenario with_equilibrium_passive(const ScenarioSpec& spec, Temperature t_e,
                                         NegativeH policy = NegativeH::reject);

} // namespace radcool

#endif // RADCOOL_SCENARIO_HPP
