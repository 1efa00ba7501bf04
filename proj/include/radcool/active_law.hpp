#ifndef RADCOOL_ACTIVE_LAW_HPP
#define RADCOOL_ACTIVE_LAW_HPP

#include "radcool/scenario.hpp"
#include "radcool/units.hpp"

namespace radcool {

// Exponential law of an actively cooled body with linear heat generation.
// Radiation is ignored regardless of the scenario's emissivity.
struct ActiveLaw {
    double asymptote_kelvin = 0.0; // (eta0 + h*S*T_m)/(h*S - eta1)
    double amplitude = 0.0;        // T0 - asymptote [K]
    double rate = 0.0;             // (h*S - eta1)/C [1/s], > 0
    Temperature initial;
};

// Throws UnstableSystem when h*S <= eta1 and NonPolynomialSource when the
// source is not linear (linearize first; silent coercion would corrupt the
// comparisons downstream).
ActiveLaw build_active_law(const ThermalScenario& scn);

// Same law from raw parameters; `source` must already be on the kelvin basis.
ActiveLaw make_active_law(double h, double surface_m2, double heat_capacity,
                          Temperature ambient, Temperature initial,
                          const LinearSource& source);

Temperature active_temperature(const ActiveLaw& law, double t_seconds);

// Time to cover 99% of the swing.
double t99(const ActiveLaw& law);

} // namespace radcool

#endif // RADCOOL_ACTIVE_LAW_HPP
