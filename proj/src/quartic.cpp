#include "radcool/quartic.hpp"

#include <algorithm>
#include <cmath>

namespace radcool {

namespace {

using cplx = std::complex<double>;

cplx eval_monic4(double a3, double a2, double a1, double a0, cplx x) {
    return (((x + a3) * x + a2) * x + a1) * x + a0;
}

cplx eval_monic4_deriv(double a3, double a2, double a1, cplx x) {
    return ((4.0 * x + 3.0 * a3) * x + 2.0 * a2) * x + a1;
}

// Real root of the depressed cubic t^3 + p*t + q via Cardano; picks the real
// root with the largest magnitude for a stable sqrt(2m) later on.
double cubic_real_root(double b2, double b1, double b0) {
    // t^3 + b2 t^2 + b1 t + b0, shift t = y - b2/3.
    const double shift = b2 / 3.0;
    const double p = b1 - b2 * b2 / 3.0;
    const double q = b0 - b2 * b1 / 3.0 + 2.0 * b2 * b2 * b2 / 27.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    if (disc >= 0.0) {
        const double root_disc = std::sqrt(disc);
        const double u = std::cbrt(-q / 2.0 + root_disc);
        const double v = std::cbrt(-q / 2.0 - root_disc);
        return u + v - shift;
    }
    // Three real roots; take the one of largest magnitude.
    const double r = std::sqrt(-p * p * p / 27.0);
    const double phi = std::acos(std::clamp(-q / (2.0 * r), -1.0, 1.0));
    const double mag = 2.0 * std::sqrt(-p / 3.0);
    double best = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double y = mag * std::cos((phi + 2.0 * M_PI * k) / 3.0);
        if (std::abs(y - shift) > std::abs(best)) best = y - shift;
    }
    return best;
}

std::array<cplx, 2> solve_quadratic(cplx b, cplx c) {
    // x^2 + b x + c; evaluated with the stable sign choice.
    const cplx disc = std::sqrt(b * b - 4.0 * c);
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0)
                       ? -0.5 * (b + disc)
                       : -0.5 * (b - disc);
    if (q == 0.0) return {cplx(0.0), cplx(0.0)};
    return {q, c / q};
}

std::array<cplx, 4> ferrari(double a3, double a2, double a1, double a0) {
    // Depress: x = y - a3/4 -> y^4 + p y^2 + q y + r.
    const double s = a3 / 4.0;
    const double p = a2 - 6.0 * s * s;
    const double q = a1 - 2.0 * a2 * s + 8.0 * s * s * s;
    const double r = a0 - a1 * s + a2 * s * s - 3.0 * s * s * s * s;

    std::array<cplx, 4> y;
    if (std::abs(q) < 1e-14 * (1.0 + std::abs(p) + std::abs(r))) {
        // Biquadratic: y^2 = z with z^2 + p z + r = 0.
        const auto z = solve_quadratic(cplx(p), cplx(r));
        const cplx s0 = std::sqrt(z[0]);
        const cplx s1 = std::sqrt(z[1]);
        y = {s0, -s0, s1, -s1};
    } else {
        // Resolvent: 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2 = 0.
        const double m = cubic_real_root(p, (2.0 * p * p - 8.0 * r) / 8.0,
                                         -q * q / 8.0);
        const cplx s2m = std::sqrt(cplx(2.0 * m));
        // y^4+py^2+qy+r = (y^2 + sy + p/2 + m - q/(2s))(y^2 - sy + p/2 + m + q/(2s))
        const cplx half = cplx(p / 2.0 + m);
        const cplx offset = q / (2.0 * s2m);
        const auto pair1 = solve_quadratic(s2m, half - offset);
        const auto pair2 = solve_quadratic(-s2m, half + offset);
        y = {pair1[0], pair1[1], pair2[0], pair2[1]};
    }
    for (auto& root : y) root -= s;
    return y;
}

} // namespace

std::array<cplx, 4> solve_monic_quartic(double a3, double a2, double a1,
                                        double a0) {
    // Rescale x = scale*u so that the transformed coefficients are O(1).
    double scale = 0.0;
    scale = std::max(scale, std::abs(a3));
    scale = std::max(scale, std::sqrt(std::abs(a2)));
    scale = std::max(scale, std::cbrt(std::abs(a1)));
    scale = std::max(scale, std::pow(std::abs(a0), 0.25));
    if (!(scale > 0.0)) return {};

    auto roots = ferrari(a3 / scale, a2 / (scale * scale),
                         a1 / (scale * scale * scale),
                         a0 / (scale * scale * scale * scale));
    for (auto& u : roots) u *= scale;

    // Newton polish on the original polynomial; Ferrari alone is fragile at
    // these coefficient spreads.
    for (auto& x : roots) {
        for (int it = 0; it < 60; ++it) {
            const cplx f = eval_monic4(a3, a2, a1, a0, x);
            const cplx df = eval_monic4_deriv(a3, a2, a1, x);
            if (df == 0.0) break;
            const cplx step = f / df;
            x -= step;
            if (std::abs(step) <= 1e-15 * (std::abs(x) + scale)) break;
        }
        // Tiny imaginary dust on a real root collapses to the axis.
        if (std::abs(x.imag()) <= 1e-10 * (std::abs(x.real()) + scale)) {
            double xr = x.real();
            for (int it = 0; it < 8; ++it) {
                const double f = (((xr + a3) * xr + a2) * xr + a1) * xr + a0;
                const double df =
                    ((4.0 * xr + 3.0 * a3) * xr + 2.0 * a2) * xr + a1;
                if (df == 0.0) break;
                const double step = f / df;
                xr -= step;
                if (std::abs(step) <= 1e-16 * (std::abs(xr) + scale)) break;
            }
            x = cplx(xr, 0.0);
        }
    }
    return roots;
}

} // namespace radcool
