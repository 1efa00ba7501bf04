#include "radcool/rate_polynomial.hpp"

#include <cmath>

#include "radcool/errors.hpp"

namespace radcool {

RatePolynomial build_rate_polynomial(const ThermalScenario& scn) {
    const double eps_sigma_s = scn.emissivity * constants::stefan_boltzmann *
                               scn.surface_m2;
    if (!(eps_sigma_s > 0.0)) {
        throw DegenerateRadiation(
            "build_rate_polynomial: epsilon*S vanishes; use the active law");
    }

    // Source polynomial on the kelvin scale, coefficient per power of T.
    std::array<double, 4> src{};
    if (const auto* lin = std::get_if<LinearSource>(&scn.source)) {
        const LinearSource k = to_kelvin_basis(*lin);
        src[0] = k.eta0;
        src[1] = k.eta1;
    } else if (const auto* cub = std::get_if<CubicSource>(&scn.source)) {
        src = to_kelvin_basis(*cub).kappa;
    } else {
        throw NonPolynomialSource(
            "build_rate_polynomial: exponential source; fit a polynomial first");
    }

    const double s = scn.surface_m2;
    const double c = scn.heat_capacity;
    const double ta = scn.ambient.kelvin();

    RatePolynomial p;
    p.kappa4 = eps_sigma_s / c;
    p.kappa3 = src[3] / c;
    p.kappa2 = src[2] / c;
    p.kappa1 = (src[1] - scn.h * s) / c;
    p.kappa0 = (src[0] + s * (scn.h * ta + scn.emissivity *
                              constants::stefan_boltzmann * std::pow(ta, 4))) / c;
    return p;
}

} // namespace radcool
