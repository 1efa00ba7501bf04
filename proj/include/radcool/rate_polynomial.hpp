#ifndef RADCOOL_RATE_POLYNOMIAL_HPP
#define RADCOOL_RATE_POLYNOMIAL_HPP

#include "radcool/scenario.hpp"

namespace radcool {

// The quartic temperature-rate polynomial, already normalized by the heat
// capacity:
//
//   dT/dt = -kappa4*T^4 + kappa3*T^3 + kappa2*T^2 + kappa1*T + kappa0
//
// with T in kelvin and the result in K/s. kappa4 is strictly positive.
struct RatePolynomial {
    double kappa4 = 0.0; // K^-3 s^-1
    double kappa3 = 0.0;
    double kappa2 = 0.0;
    double kappa1 = 0.0;
    double kappa0 = 0.0;

    double evaluate(double t_kelvin) const noexcept {
        return (((-kappa4 * t_kelvin + kappa3) * t_kelvin + kappa2) * t_kelvin +
                kappa1) * t_kelvin + kappa0;
    }

    // d(dT/dt)/dT
    double derivative(double t_kelvin) const noexcept {
        return ((-4.0 * kappa4 * t_kelvin + 3.0 * kappa3) * t_kelvin +
                2.0 * kappa2) * t_kelvin + kappa1;
    }
};

// Builds the rate polynomial of a passively cooled scenario. The source must
// be polynomial (linear or cubic); exponential sources have to be fit first.
// Throws DegenerateRadiation when epsilon*S == 0 and NonPolynomialSource for
// exponential sources.
RatePolynomial build_rate_polynomial(const ThermalScenario& scn);

} // namespace radcool

#endif // RADCOOL_RATE_POLYNOMIAL_HPP
