#include "radcool/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "radcool/errors.hpp"

namespace radcool {

namespace {

// Dormand-Prince 5(4) coefficients (autonomous ODE, no time nodes needed).
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order weights of the embedded pair.
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

double hermite(const TimeSeries::Sample& s0, const TimeSeries::Sample& s1,
               double t) {
    const double h = s1.t - s0.t;
    if (h <= 0.0) return s1.temperature;
    const double u = (t - s0.t) / h;
    const double u2 = u * u;
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u2 * (3.0 - 2.0 * u);
    const double h11 = u2 * (u - 1.0);
    return h00 * s0.temperature + h10 * h * s0.rate + h01 * s1.temperature +
           h11 * h * s1.rate;
}

} // namespace

double rate_of_change(const ThermalScenario& scn, Temperature t) {
    const double tk = t.kelvin();
    const double ta = scn.ambient.kelvin();
    const double radiation = scn.emissivity * constants::stefan_boltzmann *
                             scn.surface_m2 *
                             (ta * ta * ta * ta - tk * tk * tk * tk);
    const double convection = scn.h * scn.surface_m2 * (ta - tk);
    return (radiation + convection + heat_rate(scn.source, t)) /
           scn.heat_capacity;
}

double TimeSeries::temperature_at(double t) const {
    if (samples.empty()) {
        throw std::invalid_argument("TimeSeries: empty series");
    }
    if (t <= samples.front().t) return samples.front().temperature;
    if (t >= samples.back().t) return samples.back().temperature;
    auto it = std::upper_bound(
        samples.begin(), samples.end(), t,
        [](double value, const Sample& s) { return value < s.t; });
    return hermite(*(it - 1), *it, t);
}

TimeSeries integrate(const ThermalScenario& scn, double t_end, double rel_tol) {
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("integrate: t_end must be > 0");
    }
    if (!(rel_tol >= 1e-12 && rel_tol <= 1e-3)) {
        throw std::invalid_argument("integrate: rel_tol must be in [1e-12, 1e-3]");
    }

    const auto f = [&](double temp_kelvin) {
        return rate_of_change(scn, Temperature::from_kelvin(temp_kelvin));
    };

    double t = 0.0;
    double y = scn.initial.kelvin();
    double k1 = f(y);

    // Initial step from the inverse of the local linearized rate.
    const double t0k = scn.initial.kelvin();
    const double ess = scn.emissivity * constants::stefan_boltzmann *
                       scn.surface_m2;
    const double local_rate = std::abs(scn.h) * scn.surface_m2 +
                              std::abs(heat_rate_slope(scn.source, scn.initial)) +
                              4.0 * ess * t0k * t0k * t0k;
    double h = (local_rate > 0.0) ? 1e-3 * scn.heat_capacity / local_rate
                                  : t_end / 100.0;
    h = std::min(h, t_end);

    TimeSeries series;
    series.tolerance_used = rel_tol;
    series.samples.push_back({0.0, y, k1});

    while (t < t_end) {
        h = std::min(h, t_end - t);
        if (h < 1e-14 * std::max(1.0, t)) {
            throw StepUnderflow("integrate: step size collapsed");
        }

        const double k2 = f(y + h * a21 * k1);
        const double k3 = f(y + h * (a31 * k1 + a32 * k2));
        const double k4 = f(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 = f(y + h * (a61 * k1 + a62 * k2 + a63 * k3 +
                                     a64 * k4 + a65 * k5));
        const double y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 +
                                   b6 * k6);
        const double k7 = f(y5); // FSAL
        const double y4 = y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 +
                                   e6 * k6 + e7 * k7);

        const double scale = rel_tol * std::max(std::abs(y), std::abs(y5));
        const double err = std::abs(y5 - y4);

        if (err <= scale) {
            t += h;
            y = y5;
            k1 = k7;
            series.samples.push_back({t, y, k1});
        }
        const double ratio = (err > 0.0) ? std::pow(scale / err, 0.2) : 5.0;
        h *= std::clamp(0.9 * ratio, 0.2, 5.0);
    }
    return series;
}

double crossing_time(const TimeSeries& series, Temperature t_target) {
    const double target = t_target.kelvin();
    if (series.samples.front().temperature == target) return 0.0;

    for (std::size_t i = 1; i < series.samples.size(); ++i) {
        const auto& s0 = series.samples[i - 1];
        const auto& s1 = series.samples[i];
        const double d0 = s0.temperature - target;
        const double d1 = s1.temperature - target;
        if (d0 == 0.0) return s0.t;
        if (d1 == 0.0) return s1.t;
        if ((d0 < 0.0) != (d1 < 0.0)) {
            // Bisection on the dense output inside the bracketing step.
            double lo = s0.t, hi = s1.t;
            const bool lo_below = d0 < 0.0;
            while (hi - lo > 1e-6 * std::max(1e-9, hi)) {
                const double mid = 0.5 * (lo + hi);
                const double dm = hermite(s0, s1, mid) - target;
                if ((dm < 0.0) == lo_below) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
    }
    throw NeverReached("crossing_time: series never attains the target");
}

double crossing_time(const ThermalScenario& scn, Temperature t_target,
                     double rel_tol) {
    const double f0 = rate_of_change(scn, scn.initial);
    const double gap = std::abs(t_target - scn.initial);
    if (gap == 0.0) return 0.0;

    // Rough horizon from the initial rate, then doubled until the target is
    // crossed or the trajectory visibly plateaus short of it.
    double horizon = (std::abs(f0) > 0.0)
                         ? 4.0 * gap / std::abs(f0)
                         : 1.0;
    for (int attempt = 0; attempt < 48; ++attempt) {
        const TimeSeries series = integrate(scn, horizon, rel_tol);
        try {
            return crossing_time(series, t_target);
        } catch (const NeverReached&) {
            const auto& tail = series.samples.back();
            const auto& prev =
                series.samples[series.samples.size() > 8
                                   ? series.samples.size() - 8
                                   : 0];
            const double drift = std::abs(tail.temperature - prev.temperature);
            if (drift < 1e-12 * std::abs(tail.temperature)) {
                throw NeverReached(
                    "crossing_time: trajectory plateaued short of the target");
            }
            horizon *= 2.0;
        }
    }
    throw NeverReached("crossing_time: target not reached within the horizon");
}

void write_csv(const TimeSeries& series, std::ostream& out) {
    out << "t_s,T_c\n";
    char buf[64];
    for (const auto& s : series.samples) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g", s.t,
                      s.temperature - constants::celsius_offset);
        out << buf << '\n';
    }
}

} // namespace radcool
