#ifndef RADCOOL_ANALYSIS_HPP
#define RADCOOL_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "radcool/exact_law.hpp"
#include "radcool/scenario.hpp"
#include "radcool/units.hpp"

namespace radcool {

enum class ApproximationKind {
    coefficient,
    osullivan1,
    osullivan2,
    exponential_active,
};

enum class Direction { heating, cooling };

const char* to_string(ApproximationKind kind);
const char* to_string(Direction direction);

struct RmseReport {
    ApproximationKind approximation{};
    double rmse = 0.0;        // K
    int n = 500;              // samples
    double window_end = 0.0;  // s, the t99 horizon
};

// Governs which radiation fit the coefficient approximation uses.
enum class CoefficientFit {
    fixed_constants,  // the published 20..65 degC coefficients
    dynamic,          // least-squares fit over the scenario's temp_range
};

// RMSE between the exact inversion and one approximation, n samples equally
// spaced in time over [0, t99].
RmseReport rmse(const ExactLaw& reference, ApproximationKind candidate,
                const ThermalScenario& scn,
                CoefficientFit fit = CoefficientFit::fixed_constants,
                int n = 500);

// Ratio h_pc/h_ac at equal equilibrium:
//   (eps*sigma*S*(Ta^4 - Te^4) + H(Te)) / H(Te).
// Throws ZeroHeatSource when H(Te) <= 0.
double rcr(const ScenarioSpec& spec, Temperature t_e);

struct DeltaTauResult {
    double value = 0.0;   // |T_pc - T_ac(t*)| / |Te - T0|
    bool h_negative = false;
};

// Relative temperature lag between the passive and the active trajectory,
// measured when the passive body covers 85% of its swing. Exponential
// sources: the active baseline uses the tangent linearization at Te and the
// passive trajectory comes from the ODE oracle.
DeltaTauResult delta_tau(const ScenarioSpec& spec, Temperature t_e,
                         Direction direction, double rel_tol = 1e-9);

enum class Metric { rcr, delta_tau };
enum class IhgLevel { min, max };

struct SweepSpec {
    Metric metric = Metric::rcr;
    std::vector<double> surface_grid;       // m^2
    std::vector<Temperature> te_grid;
    IhgLevel ihg = IhgLevel::max;
    Direction direction = Direction::heating; // delta_tau only
};

struct ComparisonRow {
    double surface_m2 = 0.0;
    Temperature te;
    Direction direction = Direction::heating;
    Metric metric = Metric::rcr;
    double value = 0.0;       // NaN when errored
    bool h_negative = false;
    std::string error;        // named error, empty on success
};

// One row per grid point, ordered by (surface, te) grid index. Per-point
// errors are recorded in the row; the sweep itself never throws for them.
std::vector<ComparisonRow> sweep(const SweepSpec& spec);

// Shared study configuration: PVC-like emissivity, room ambient, the
// reference linear source, the two exponential load presets, and the
// glass-slab heat capacity scaling used throughout.
namespace presets {

Temperature ambient();                     // 20 degC
double emissivity();                       // 0.94
LinearSource linear_reference_source();    // kelvin basis
ExponentialSource exponential_ihg(IhgLevel level);
double slab_heat_capacity(double surface_m2); // S * 2 mm * volumetric c

// Validation pair: 1 dm^2 slab heating 25->45 degC / cooling 45->25 degC,
// h solved from the passive equilibrium.
ThermalScenario validation_heating();
ThermalScenario validation_cooling();

// Comparison-study spec (no h): T0 = 25 degC heating / 55 degC cooling.
ScenarioSpec comparison_spec(double surface_m2, IhgLevel level,
                             Direction direction);
ScenarioSpec comparison_spec_linear(double surface_m2, Direction direction);

} // namespace presets

} // namespace radcool

#endif // RADCOOL_ANALYSIS_HPP
