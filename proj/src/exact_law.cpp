#include "radcool/exact_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "radcool/errors.hpp"
#include "radcool/quartic.hpp"

namespace radcool {

namespace {

// Antiderivative of 1/((T-w1)(T-w2)((T-a)^2+b^2)) scaled by the partial
// fractions; t(T) = (F(T0) - F(T)) / kappa4.
double antiderivative(const RootStructure& r, const PartialFractionConstants& pf,
                      double t) {
    const double quad = (t - r.alpha) * (t - r.alpha) + r.beta * r.beta;
    return pf.a * std::log(std::abs(t - r.omega1)) +
           pf.b * std::log(std::abs(t - r.omega2)) +
           0.5 * pf.c * std::log(quad) +
           (r.alpha * pf.c + pf.d) / r.beta *
               std::atan((t - r.alpha) / r.beta);
}

double time_from_antiderivative(const ExactLaw& law, double t_kelvin) {
    return (law.c0 - antiderivative(law.roots, law.pf, t_kelvin)) /
           law.rate.kappa4;
}

} // namespace

RootStructure solve_roots(const RatePolynomial& p) {
    if (!(p.kappa4 > 0.0)) {
        throw UnexpectedRootStructure("solve_roots: kappa4 must be > 0");
    }
    // dT/dt = -kappa4 (T^4 + a3 T^3 + a2 T^2 + a1 T + a0)
    const auto roots = solve_monic_quartic(-p.kappa3 / p.kappa4,
                                           -p.kappa2 / p.kappa4,
                                           -p.kappa1 / p.kappa4,
                                           -p.kappa0 / p.kappa4);

    std::vector<double> real;
    std::vector<std::complex<double>> cplx;
    for (const auto& z : roots) {
        if (z.imag() == 0.0) {
            real.push_back(z.real());
        } else {
            cplx.push_back(z);
        }
    }
    if (real.size() != 2 || cplx.size() != 2) {
        throw UnexpectedRootStructure(
            "solve_roots: expected two real roots and a conjugate pair, got " +
            std::to_string(real.size()) + " real roots (no stable equilibrium)");
    }

    RootStructure r;
    r.omega1 = std::min(real[0], real[1]);
    r.omega2 = std::max(real[0], real[1]);
    r.alpha = 0.5 * (cplx[0].real() + cplx[1].real());
    r.beta = 0.5 * (std::abs(cplx[0].imag()) + std::abs(cplx[1].imag()));

    if (!(r.beta > 0.0)) {
        throw UnexpectedRootStructure("solve_roots: conjugate pair collapsed");
    }
    if (!(r.omega2 > 0.0)) {
        throw UnexpectedRootStructure(
            "solve_roots: stable root not at positive temperature");
    }

    // Residual sanity on the real roots, relative to the largest term.
    for (const double w : {r.omega1, r.omega2}) {
        double max_term = std::abs(p.kappa0);
        max_term = std::max(max_term, std::abs(p.kappa1 * w));
        max_term = std::max(max_term, std::abs(p.kappa2 * w * w));
        max_term = std::max(max_term, std::abs(p.kappa3 * w * w * w));
        max_term = std::max(max_term, std::abs(p.kappa4 * w * w * w * w));
        if (std::abs(p.evaluate(w)) > 1e-9 * max_term) {
            throw UnexpectedRootStructure(
                "solve_roots: root failed to polish below tolerance");
        }
    }
    return r;
}

PartialFractionConstants partial_fractions(const RootStructure& r) {
    if (std::abs(r.omega1 - r.omega2) < 1e-6) {
        throw RepeatedRealRoot(
            "partial_fractions: real roots within 1e-6 K of each other");
    }
    const double q1 = (r.omega1 - r.alpha) * (r.omega1 - r.alpha) +
                      r.beta * r.beta;
    const double q2 = (r.omega2 - r.alpha) * (r.omega2 - r.alpha) +
                      r.beta * r.beta;
    PartialFractionConstants pf;
    pf.a = 1.0 / ((r.omega1 - r.omega2) * q1);
    pf.b = 1.0 / ((r.omega2 - r.omega1) * q2);
    pf.c = -(pf.a + pf.b);
    pf.d = pf.a * (2.0 * r.alpha - r.omega1) + pf.b * (2.0 * r.alpha - r.omega2);
    return pf;
}

double partial_fraction_reconstruction(const RootStructure& r,
                                       const PartialFractionConstants& pf,
                                       double t) {
    const double quad = (t - r.alpha) * (t - r.alpha) + r.beta * r.beta;
    return pf.a / (t - r.omega1) + pf.b / (t - r.omega2) +
           (pf.c * t + pf.d) / quad;
}

Temperature equilibrium(const RatePolynomial& rate, const RootStructure& roots) {
    if (!(rate.derivative(roots.omega2) < 0.0)) {
        throw UnstableEquilibrium(
            "equilibrium: rate derivative non-negative at omega2");
    }
    return Temperature::from_kelvin(roots.omega2);
}

Temperature equilibrium(const ExactLaw& law) {
    return equilibrium(law.rate, law.roots);
}

ExactLaw build_exact_law(const ThermalScenario& scn) {
    ExactLaw law;
    law.rate = build_rate_polynomial(scn);
    law.roots = solve_roots(law.rate);
    law.pf = partial_fractions(law.roots);
    law.initial = scn.initial;
    law.equilibrium = equilibrium(law.rate, law.roots);

    const double t0 = scn.initial.kelvin();
    if (std::abs(t0 - law.roots.omega2) <= 1e-10 * std::abs(law.roots.omega2)) {
        throw AtEquilibrium(
            "build_exact_law: initial temperature equals the equilibrium");
    }
    if (!(t0 > law.roots.omega1)) {
        throw OutOfBasin(
            "build_exact_law: initial temperature below the unstable root");
    }
    law.c0 = antiderivative(law.roots, law.pf, t0);
    return law;
}

double time_of_temperature(const ExactLaw& law, Temperature t) {
    const double te = law.equilibrium.kelvin();
    const double t0 = law.initial.kelvin();
    const double x = t.kelvin();
    const double swing = std::abs(te - t0);

    if (std::abs(x - te) < 1e-9 * swing) {
        throw AtEquilibrium(
            "time_of_temperature: temperature at the equilibrium, t -> inf");
    }
    if (x < std::min(t0, te) || x > std::max(t0, te)) {
        throw OutOfBasin(
            "time_of_temperature: temperature outside [T0, Te]");
    }
    return time_from_antiderivative(law, x);
}

InverseSample temperature_at_time(const ExactLaw& law, double t_seconds) {
    if (!(t_seconds >= 0.0)) {
        throw std::invalid_argument("temperature_at_time: t must be >= 0");
    }
    const double t0 = law.initial.kelvin();
    const double te = law.equilibrium.kelvin();
    if (t_seconds == 0.0) return {law.initial, false};

    const double swing = te - t0; // signed
    const double edge = te - 1e-13 * swing; // just short of the equilibrium
    const double t_edge = time_from_antiderivative(law, edge);
    if (t_seconds >= t_edge) {
        return {Temperature::from_kelvin(te), true};
    }

    // Safeguarded Newton on g(T) = t(T) - t; dt/dT = 1/p(T) so the Newton
    // step is -g * p(T). Bisection keeps the bracket when Newton strays.
    double lo = std::min(t0, edge);
    double hi = std::max(t0, edge);
    // g is monotone; identify the signs via the endpoints.
    double x = 0.5 * (lo + hi);
    const double t_tol = 1e-12 * std::max(t_seconds, 1e-6);
    const bool lo_negative = (lo == t0); // g(T0) = -t < 0 < g(edge)

    for (int it = 0; it < 200; ++it) {
        const double g = time_from_antiderivative(law, x) - t_seconds;
        if (std::abs(g) <= t_tol) break;
        if ((g < 0.0) == lo_negative) {
            lo = x;
        } else {
            hi = x;
        }
        const double step = -g * law.rate.evaluate(x);
        double next = x + step;
        if (!(next > lo) || !(next < hi)) {
            next = 0.5 * (lo + hi); // Newton left the bracket
        }
        if (next == x) break;
        x = next;
        if (hi - lo <= 4e-16 * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return {Temperature::from_kelvin(x), false};
}

double t99(const ExactLaw& law) {
    const double t0 = law.initial.kelvin();
    const double target = t0 + 0.99 * (law.equilibrium.kelvin() - t0);
    return time_of_temperature(law, Temperature::from_kelvin(target));
}

} // namespace radcool
