#ifndef RADCOOL_ORACLE_HPP
#define RADCOOL_ORACLE_HPP

#include <iosfwd>
#include <vector>

#include "radcool/scenario.hpp"
#include "radcool/units.hpp"

namespace radcool {

// Brute-force reference trajectory from adaptive integration of the raw
// rate ODE. Works for every heat-source model, exponential included.
struct TimeSeries {
    struct Sample {
        double t = 0.0;       // s, strictly increasing
        double temperature = 0.0; // K
        double rate = 0.0;    // dT/dt at (t, T), for dense interpolation
    };
    std::vector<Sample> samples; // first sample is (0, T0)
    double tolerance_used = 0.0;

    double t_end() const { return samples.back().t; }

    // Cubic Hermite interpolation between accepted steps; t clamped to the
    // covered interval.
    double temperature_at(double t) const;
};

// Right-hand side of the rate ODE, [K/s].
double rate_of_change(const ThermalScenario& scn, Temperature t);

// Embedded Dormand-Prince 4(5) pair with per-step relative error <= rel_tol.
// rel_tol must lie in [1e-12, 1e-3]. Throws StepUnderflow if the step
// collapses (not expected for these smooth scalar problems).
TimeSeries integrate(const ThermalScenario& scn, double t_end, double rel_tol);

// First time the series crosses t_target, refined by bisection on the dense
// output to 1e-6 relative. Throws NeverReached when the series never attains
// the target.
double crossing_time(const TimeSeries& series, Temperature t_target);

// Convenience overload: integrates the scenario just far enough. Throws
// NeverReached when the trajectory plateaus short of the target.
double crossing_time(const ThermalScenario& scn, Temperature t_target,
                     double rel_tol);

// CSV dump (t_s, T_c), same column contract as the CLI trace output.
void write_csv(const TimeSeries& series, std::ostream& out);

} // namespace radcool

#endif // RADCOOL_ORACLE_HPP
