#ifndef RADCOOL_APPROXIMATIONS_HPP
#define RADCOOL_APPROXIMATIONS_HPP

#include "radcool/scenario.hpp"
#include "radcool/units.hpp"

namespace radcool {

// Quadratic stand-in for T^4 over a temperature range:
//   T^4 ~= q0 + q1*T + q2*T^2  (kelvin).
struct QuadraticRadiationFit {
    double q0 = 0.0; // K^4
    double q1 = 0.0; // K^3
    double q2 = 0.0; // K^2
    TempRange fit_range{Temperature::from_kelvin(1), Temperature::from_kelvin(2)};
    double max_rel_error = 0.0; // from a dense scan over fit_range

    double evaluate(double t_kelvin) const noexcept {
        return (q2 * t_kelvin + q1) * t_kelvin + q0;
    }
};

enum class RadiationFitMode {
    fixed_constants, // the published 20..65 degC coefficients
    dynamic          // least-squares fit tailored to `range`
};

// fixed_constants ignores `range` for the coefficients but reports the
// residual over the requested range. dynamic fits T^4 on 512 equispaced
// kelvin samples; range must sit within (0, 500] K.
QuadraticRadiationFit fit_radiation_quadratic(const TempRange& range,
                                              RadiationFitMode mode);

// Invertible cooling law obtained by substituting the quadratic radiation
// fit into the rate polynomial:  dT/dt = k2*T^2 + k1*T + k0, k2 < 0.
struct QuadraticLaw {
    double omega1 = 0.0;   // K, smaller root
    double omega2 = 0.0;   // K, larger root = equilibrium
    double coeff_a = 0.0;  // 1/(omega2 - omega1)
    double kappa2 = 0.0;   // 1/(K*s), < 0
    double c0 = 0.0;       // |T0-omega1| / |T0-omega2|
    bool heating = false;  // branch sign, from sign(Te - T0)
    bool degenerate_start = false; // T0 sat on the unstable root
    Temperature initial;
};

// Throws WrongSignKappa2 and ComplexRoots per the preconditions; the source
// must be polynomial of order <= 2.
QuadraticLaw build_quadratic_law(const ThermalScenario& scn,
                                 const QuadraticRadiationFit& fit);

Temperature quadratic_temperature(const QuadraticLaw& law, double t_seconds);

// Binomial-expansion coefficients in theta = T - T_a:
//   -C dtheta/dt = k*theta^4 + l*theta^3 + m*theta^2 + n*theta + p.
struct OSullivanCoeffs {
    double k = 0.0; // eps*sigma*S
    double l = 0.0; // 4*eps*sigma*S*T_a
    double m = 0.0; // 6*eps*sigma*S*T_a^2
    double n = 0.0; // h*S - eta1 + 4*eps*sigma*S*T_a^3
    double p = 0.0; // -(eta1*T_a + eta0)
};

// Linear sources only (kelvin-basis eta's are used).
OSullivanCoeffs osullivan_coeffs(const ThermalScenario& scn);

// First-order truncation: exponential law in theta.
// Throws UnstableSystem when n <= 0.
Temperature osullivan1_temperature(const ThermalScenario& scn, double t_seconds);

// Second-order truncation: logistic-shaped law in theta.
// Throws ComplexRoots when n^2 - 4*p*m <= 0.
Temperature osullivan2_temperature(const ThermalScenario& scn, double t_seconds);

// Equilibria the truncated laws converge to (for diagnostics/tests).
Temperature osullivan1_equilibrium(const ThermalScenario& scn);
Temperature osullivan2_equilibrium(const ThermalScenario& scn);

} // namespace radcool

#endif // RADCOOL_APPROXIMATIONS_HPP
