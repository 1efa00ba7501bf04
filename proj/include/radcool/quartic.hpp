#ifndef RADCOOL_QUARTIC_HPP
#define RADCOOL_QUARTIC_HPP

#include <array>
#include <complex>

namespace radcool {

// All four complex roots of the monic quartic
//   x^4 + a3*x^3 + a2*x^2 + a1*x + a0.
// Ferrari's closed form provides the estimates; every root is then polished
// by Newton iteration in complex arithmetic. The polynomial is rescaled
// internally so that huge coefficient spreads (kappa4 ~ 1e-11 scenarios)
// stay well conditioned.
std::array<std::complex<double>, 4> solve_monic_quartic(double a3, double a2,
                                                        double a1, double a0);

} // namespace radcool

#endif // RADCOOL_QUARTIC_HPP
