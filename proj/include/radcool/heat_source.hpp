#ifndef RADCOOL_HEAT_SOURCE_HPP
#define RADCOOL_HEAT_SOURCE_HPP

#include <array>
#include <variant>

#include "radcool/units.hpp"

namespace radcool {

// Temperature scale the source coefficients are expressed on. The two scales
// differ by an affine shift, so the basis must travel with the coefficients.
enum class TempBasis { kelvin, celsius };

// H(T) = eta1*T + eta0, T on `basis`.
struct LinearSource {
    double eta1 = 0.0; // W/K
    double eta0 = 0.0; // W
    TempBasis basis = TempBasis::kelvin;
};

// H(T) = kappa[3]*T^3 + kappa[2]*T^2 + kappa[1]*T + kappa[0], T on `basis`.
struct CubicSource {
    std::array<double, 4> kappa{}; // kappa[i] multiplies T^i, W*K^-i
    TempBasis basis = TempBasis::kelvin;
};

// H(T) = alpha + exp((T - gamma)/beta), T on `basis`.
struct ExponentialSource {
    double alpha = 0.0; // W
    double beta = 1.0;  // deg (same scale as basis)
    double gamma = 0.0; // deg (same scale as basis)
    TempBasis basis = TempBasis::celsius;
};

using HeatSourceModel = std::variant<LinearSource, CubicSource, ExponentialSource>;

// Generated heat [W] at temperature T, evaluated on the model's declared basis.
double heat_rate(const HeatSourceModel& source, Temperature t);

// Slope dH/dT [W/K] at temperature T (scale-invariant, same on both bases).
double heat_rate_slope(const HeatSourceModel& source, Temperature t);

// Rewrites the coefficients on the kelvin scale; the physical H(T) is
// unchanged to rounding.
LinearSource to_kelvin_basis(const LinearSource& s);
CubicSource to_kelvin_basis(const CubicSource& s);
ExponentialSource to_kelvin_basis(const ExponentialSource& s);

// Tangent line to H at T, expressed on the kelvin basis. Preserves H(T)
// and dH/dT(T) exactly.
LinearSource linearize_at(const HeatSourceModel& source, Temperature t);

struct SourceFit {
    CubicSource source;       // kelvin basis, coefficients above `order` zero
    double max_rel_error = 0; // max |fit-H|/H over the fit range
};

// Least-squares polynomial fit of an exponential source over `range`,
// sampled on >= 100 equispaced kelvin points. order in {1,2,3}.
SourceFit fit_source_polynomial(const ExponentialSource& source,
                                const TempRange& range, int order);

} // namespace radcool

#endif // RADCOOL_HEAT_SOURCE_HPP
