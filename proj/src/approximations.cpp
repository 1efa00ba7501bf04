#include "radcool/approximations.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "radcool/errors.hpp"

namespace radcool {

namespace {

// Published quadratic coefficients for T^4 over 20..65 degC.
constexpr double kFixedQ0 = 29700057265.0;
constexpr double kFixedQ1 = -251483462.0;
constexpr double kFixedQ2 = 598262.0;

double scan_max_rel_error(const QuadraticRadiationFit& fit) {
    constexpr int n_eval = 2048;
    const double lo = fit.fit_range.lo.kelvin();
    const double width = fit.fit_range.width();
    double max_rel = 0.0;
    for (int i = 0; i < n_eval; ++i) {
        const double t = lo + width * i / (n_eval - 1);
        const double t4 = t * t * t * t;
        max_rel = std::max(max_rel, std::abs(fit.evaluate(t) - t4) / t4);
    }
    return max_rel;
}

// Kelvin-basis linear coefficients, or the order<=2 cubic reduced to them
// plus a quadratic term. Returns {c0, c1, c2}.
std::array<double, 3> source_coeffs_up_to_quadratic(const HeatSourceModel& src) {
    if (const auto* lin = std::get_if<LinearSource>(&src)) {
        const LinearSource k = to_kelvin_basis(*lin);
        return {k.eta0, k.eta1, 0.0};
    }
    if (const auto* cub = std::get_if<CubicSource>(&src)) {
        const CubicSource k = to_kelvin_basis(*cub);
        if (k.kappa[3] != 0.0) {
            throw std::invalid_argument(
                "quadratic law: source order must be <= 2");
        }
        return {k.kappa[0], k.kappa[1], k.kappa[2]};
    }
    throw NonPolynomialSource(
        "quadratic law: exponential source; fit a polynomial first");
}

// Overflow-free logistic branch shared by the coefficient and second-order
// O'Sullivan laws: value = (w1*e^-X +- w2*c0) / (e^-X +- c0), X >= 0.
double logistic_branch(double w1, double w2, double c0, double x_exponent,
                       bool plus_branch) {
    const double u = std::exp(-x_exponent);
    if (plus_branch) return (w1 * u + w2 * c0) / (u + c0);
    return (w1 * u - w2 * c0) / (u - c0);
}

} // namespace

QuadraticRadiationFit fit_radiation_quadratic(const TempRange& range,
                                              RadiationFitMode mode) {
    if (!(range.width() > 0.0)) {
        throw DegenerateRange("fit_radiation_quadratic: empty range");
    }
    QuadraticRadiationFit fit;
    fit.fit_range = range;

    if (mode == RadiationFitMode::fixed_constants) {
        fit.q0 = kFixedQ0;
        fit.q1 = kFixedQ1;
        fit.q2 = kFixedQ2;
        fit.max_rel_error = scan_max_rel_error(fit);
        return fit;
    }

    if (!(range.hi.kelvin() <= 500.0)) {
        throw DegenerateRange(
            "fit_radiation_quadratic: dynamic mode limited to (0, 500] K");
    }

    constexpr int n_samples = 512;
    const double lo = range.lo.kelvin();
    const double mid = lo + 0.5 * range.width();

    // Shifted coordinate for conditioning; expanded back afterwards.
    Eigen::MatrixXd vandermonde(n_samples, 3);
    Eigen::VectorXd rhs(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = lo + range.width() * i / (n_samples - 1);
        const double u = t - mid;
        vandermonde(i, 0) = 1.0;
        vandermonde(i, 1) = u;
        vandermonde(i, 2) = u * u;
        rhs(i) = t * t * t * t;
    }
    const Eigen::VectorXd c = vandermonde.colPivHouseholderQr().solve(rhs);
    // c0 + c1 (T - mid) + c2 (T - mid)^2
    fit.q2 = c(2);
    fit.q1 = c(1) - 2.0 * c(2) * mid;
    fit.q0 = c(0) - c(1) * mid + c(2) * mid * mid;
    fit.max_rel_error = scan_max_rel_error(fit);
    return fit;
}

QuadraticLaw build_quadratic_law(const ThermalScenario& scn,
                                 const QuadraticRadiationFit& fit) {
    const auto src = source_coeffs_up_to_quadratic(scn.source);
    const double ess = scn.emissivity * constants::stefan_boltzmann *
                       scn.surface_m2;
    const double s = scn.surface_m2;
    const double c_heat = scn.heat_capacity;
    const double ta = scn.ambient.kelvin();

    // Substitute T^4 -> q(T) in the rate polynomial; the constant T_a^4
    // absorbed term stays exact.
    const double k2 = (src[2] - ess * fit.q2) / c_heat;
    const double k1 = (src[1] - scn.h * s - ess * fit.q1) / c_heat;
    const double k0 =
        (src[0] + s * (scn.h * ta +
                       scn.emissivity * constants::stefan_boltzmann *
                           std::pow(ta, 4)) -
         ess * fit.q0) / c_heat;

    if (!(k2 < 0.0)) {
        throw WrongSignKappa2("build_quadratic_law: kappa2 must be negative");
    }
    const double disc = k1 * k1 - 4.0 * k2 * k0;
    if (!(disc > 0.0)) {
        throw ComplexRoots("build_quadratic_law: quadratic rate has no real roots");
    }

    QuadraticLaw law;
    law.kappa2 = k2;
    const double root = std::sqrt(disc);
    law.omega1 = (-k1 + root) / (2.0 * k2); // k2 < 0 puts this one lower
    law.omega2 = (-k1 - root) / (2.0 * k2);
    law.coeff_a = 1.0 / (law.omega2 - law.omega1);

    const double t0 = scn.initial.kelvin();
    law.c0 = std::abs(t0 - law.omega1) / std::abs(t0 - law.omega2);
    law.degenerate_start = (law.c0 == 0.0);
    law.heating = law.omega2 > t0;
    law.initial = scn.initial;
    return law;
}

Temperature quadratic_temperature(const QuadraticLaw& law, double t_seconds) {
    if (!(t_seconds >= 0.0)) {
        throw std::invalid_argument("quadratic_temperature: t must be >= 0");
    }
    if (law.degenerate_start) return law.initial;
    // exponent -(kappa2/A) t grows with t (kappa2 < 0, A > 0)
    const double x = -(law.kappa2 / law.coeff_a) * t_seconds;
    return Temperature::from_kelvin(logistic_branch(
        law.omega1, law.omega2, law.c0, x, law.heating));
}

OSullivanCoeffs osullivan_coeffs(const ThermalScenario& scn) {
    const auto* linear = std::get_if<LinearSource>(&scn.source);
    if (linear == nullptr) {
        throw NonPolynomialSource("osullivan_coeffs: linear source required");
    }
    const LinearSource k = to_kelvin_basis(*linear);
    const double ess = scn.emissivity * constants::stefan_boltzmann *
                       scn.surface_m2;
    const double ta = scn.ambient.kelvin();
    OSullivanCoeffs c;
    c.k = ess;
    c.l = 4.0 * ess * ta;
    c.m = 6.0 * ess * ta * ta;
    c.n = scn.h * scn.surface_m2 - k.eta1 + 4.0 * ess * ta * ta * ta;
    c.p = -(k.eta1 * ta + k.eta0);
    return c;
}

Temperature osullivan1_temperature(const ThermalScenario& scn,
                                   double t_seconds) {
    if (!(t_seconds >= 0.0)) {
        throw std::invalid_argument("osullivan1_temperature: t must be >= 0");
    }
    const OSullivanCoeffs c = osullivan_coeffs(scn);
    if (!(c.n > 0.0)) {
        throw UnstableSystem("osullivan1_temperature: n <= 0");
    }
    const double ta = scn.ambient.kelvin();
    const double theta0 = scn.initial.kelvin() - ta;
    const double value = (theta0 + c.p / c.n) *
                             std::exp(-c.n / scn.heat_capacity * t_seconds) -
                         c.p / c.n + ta;
    return Temperature::from_kelvin(value);
}

Temperature osullivan1_equilibrium(const ThermalScenario& scn) {
    const OSullivanCoeffs c = osullivan_coeffs(scn);
    if (!(c.n > 0.0)) {
        throw UnstableSystem("osullivan1_equilibrium: n <= 0");
    }
    return Temperature::from_kelvin(scn.ambient.kelvin() - c.p / c.n);
}

namespace {

struct OSullivan2Law {
    double omega1 = 0.0; // theta-domain roots
    double omega2 = 0.0;
    double coeff_a = 0.0; // -1/(omega2 - omega1)
    double c0 = 0.0;
    double m = 0.0;
    bool plus_branch = false;
};

OSullivan2Law build_osullivan2(const ThermalScenario& scn) {
    const OSullivanCoeffs c = osullivan_coeffs(scn);
    const double disc = c.n * c.n - 4.0 * c.p * c.m;
    if (!(disc > 0.0)) {
        throw ComplexRoots("osullivan2: n^2 - 4*p*m <= 0");
    }
    OSullivan2Law law;
    const double root = std::sqrt(disc);
    law.omega1 = (-root - c.n) / (2.0 * c.m);
    law.omega2 = (root - c.n) / (2.0 * c.m);
    law.coeff_a = -1.0 / (law.omega2 - law.omega1);
    law.m = c.m;
    const double theta0 = scn.initial.kelvin() - scn.ambient.kelvin();
    law.c0 = std::abs(theta0 - law.omega1) / std::abs(theta0 - law.omega2);
    law.plus_branch = law.omega2 > theta0; // "+" for Te > T0
    return law;
}

} // namespace

Temperature osullivan2_temperature(const ThermalScenario& scn,
                                   double t_seconds) {
    if (!(t_seconds >= 0.0)) {
        throw std::invalid_argument("osullivan2_temperature: t must be >= 0");
    }
    const OSullivan2Law law = build_osullivan2(scn);
    // exponent -m t/(A C) grows with t (A < 0)
    const double x = -law.m / (law.coeff_a * scn.heat_capacity) * t_seconds;
    const double theta = logistic_branch(law.omega1, law.omega2, law.c0, x,
                                         law.plus_branch);
    return Temperature::from_kelvin(theta + scn.ambient.kelvin());
}

Temperature osullivan2_equilibrium(const ThermalScenario& scn) {
    const OSullivan2Law law = build_osullivan2(scn);
    return Temperature::from_kelvin(law.omega2 + scn.ambient.kelvin());
}

} // namespace radcool
