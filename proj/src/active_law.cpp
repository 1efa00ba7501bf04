#include "radcool/active_law.hpp"

#include <cmath>
#include <stdexcept>

#include "radcool/errors.hpp"

namespace radcool {

ActiveLaw make_active_law(double h, double surface_m2, double heat_capacity,
                          Temperature ambient, Temperature initial,
                          const LinearSource& source) {
    const LinearSource k = to_kelvin_basis(source);
    const double hs = h * surface_m2;
    if (!(hs > k.eta1)) {
        throw UnstableSystem(
            "make_active_law: h*S <= eta1, temperature diverges");
    }
    ActiveLaw law;
    law.asymptote_kelvin = (k.eta0 + hs * ambient.kelvin()) / (hs - k.eta1);
    law.amplitude = initial.kelvin() - law.asymptote_kelvin;
    law.rate = (hs - k.eta1) / heat_capacity;
    law.initial = initial;
    return law;
}

ActiveLaw build_active_law(const ThermalScenario& scn) {
    const auto* linear = std::get_if<LinearSource>(&scn.source);
    if (linear == nullptr) {
        throw NonPolynomialSource(
            "build_active_law: active law requires a linear source");
    }
    return make_active_law(scn.h, scn.surface_m2, scn.heat_capacity,
                           scn.ambient, scn.initial, *linear);
}

Temperature active_temperature(const ActiveLaw& law, double t_seconds) {
    if (!(t_seconds >= 0.0)) {
        throw std::invalid_argument("active_temperature: t must be >= 0");
    }
    return Temperature::from_kelvin(law.asymptote_kelvin +
                                    law.amplitude *
                                        std::exp(-law.rate * t_seconds));
}

double t99(const ActiveLaw& law) {
    return std::log(100.0) / law.rate;
}

} // namespace radcool
