#ifndef RADCOOL_EXACT_LAW_HPP
#define RADCOOL_EXACT_LAW_HPP

#include "radcool/rate_polynomial.hpp"
#include "radcool/scenario.hpp"
#include "radcool/units.hpp"

namespace radcool {

// Root structure of the quartic rate polynomial: two real roots and one
// complex-conjugate pair alpha +- i*beta.
struct RootStructure {
    double omega1 = 0.0; // K, smaller real root
    double omega2 = 0.0; // K, larger real root (the stable equilibrium)
    double alpha = 0.0;  // K, Re of the complex pair
    double beta = 0.0;   // K, Im of the complex pair, > 0
};

// Constants of the partial-fraction split
//   1/((T-w1)(T-w2)((T-a)^2+b^2)) = A/(T-w1) + B/(T-w2) + (C T + D)/((T-a)^2+b^2)
struct PartialFractionConstants {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0; // identically -(a + b)
    double d = 0.0;
};

// Extracts the expected two-real/one-conjugate-pair structure.
// Throws UnexpectedRootStructure when the polynomial has zero or four real
// roots (no stable thermal equilibrium).
RootStructure solve_roots(const RatePolynomial& p);

// Closed-form partial-fraction constants. Throws RepeatedRealRoot when the
// real roots collide (|w1 - w2| < 1e-6 K).
PartialFractionConstants partial_fractions(const RootStructure& r);

// Left-hand side of the reconstruction identity at temperature t (kelvin);
// used by tests against 1/prod(T-w_i).
double partial_fraction_reconstruction(const RootStructure& r,
                                       const PartialFractionConstants& pf,
                                       double t_kelvin);

// The closed-form cooling law t(T) with its numerically inverted T(t).
struct ExactLaw {
    RatePolynomial rate;
    RootStructure roots;
    PartialFractionConstants pf;
    double c0 = 0.0; // integration constant: t(T0) == 0
    Temperature initial;
    Temperature equilibrium;

    bool heating() const noexcept {
        return equilibrium.kelvin() > initial.kelvin();
    }
};

// Assembles the law for a scenario. Throws AtEquilibrium when T0 is already
// the equilibrium, plus anything build_rate_polynomial / solve_roots throw.
ExactLaw build_exact_law(const ThermalScenario& scn);

// Seconds needed to move from T0 to t. Throws OutOfBasin outside
// [min(T0,Te), max(T0,Te)] and AtEquilibrium within tolerance of Te.
double time_of_temperature(const ExactLaw& law, Temperature t);

struct InverseSample {
    Temperature temperature;
    bool saturated = false; // t was beyond numerical resolution; clamped to Te
};

// Numerical inverse of time_of_temperature by bracketed root search.
InverseSample temperature_at_time(const ExactLaw& law, double t_seconds);

// The stable equilibrium omega2; asserts d(dT/dt)/dT < 0 there.
Temperature equilibrium(const RatePolynomial& rate, const RootStructure& roots);
Temperature equilibrium(const ExactLaw& law);

// Time to cover 99% of the swing |Te - T0|; the standard evaluation window.
double t99(const ExactLaw& law);

} // namespace radcool

#endif // RADCOOL_EXACT_LAW_HPP
