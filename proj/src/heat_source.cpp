#include "radcool/heat_source.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "radcool/errors.hpp"

namespace radcool {

namespace {

double basis_value(TempBasis basis, Temperature t) {
    return basis == TempBasis::kelvin ? t.kelvin() : t.celsius();
}

} // namespace

double heat_rate(const HeatSourceModel& source, Temperature t) {
    return std::visit(
        [&](const auto& s) -> double {
            using S = std::decay_t<decltype(s)>;
            const double x = basis_value(s.basis, t);
            if constexpr (std::is_same_v<S, LinearSource>) {
                return s.eta1 * x + s.eta0;
            } else if constexpr (std::is_same_v<S, CubicSource>) {
                return ((s.kappa[3] * x + s.kappa[2]) * x + s.kappa[1]) * x +
                       s.kappa[0];
            } else {
                return s.alpha + std::exp((x - s.gamma) / s.beta);
            }
        },
        source);
}

double heat_rate_slope(const HeatSourceModel& source, Temperature t) {
    return std::visit(
        [&](const auto& s) -> double {
            using S = std::decay_t<decltype(s)>;
            const double x = basis_value(s.basis, t);
            if constexpr (std::is_same_v<S, LinearSource>) {
                return s.eta1;
            } else if constexpr (std::is_same_v<S, CubicSource>) {
                return (3.0 * s.kappa[3] * x + 2.0 * s.kappa[2]) * x + s.kappa[1];
            } else {
                return std::exp((x - s.gamma) / s.beta) / s.beta;
            }
        },
        source);
}

LinearSource to_kelvin_basis(const LinearSource& s) {
    if (s.basis == TempBasis::kelvin) return s;
    // eta1*(T - 273.15) + eta0 = eta1*T + (eta0 - 273.15*eta1)
    return LinearSource{s.eta1, s.eta0 - s.eta1 * constants::celsius_offset,
                        TempBasis::kelvin};
}

CubicSource to_kelvin_basis(const CubicSource& s) {
    if (s.basis == TempBasis::kelvin) return s;
    // Expand P(T - d) with d = 273.15 via the binomial theorem.
    const double d = -constants::celsius_offset;
    static constexpr double binom[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    CubicSource out;
    out.basis = TempBasis::kelvin;
    for (int i = 0; i < 4; ++i) {
        double power = 1.0;
        for (int j = i; j >= 0; --j) {
            out.kappa[j] += s.kappa[i] * binom[i][j] * power;
            power *= d;
        }
    }
    return out;
}

ExponentialSource to_kelvin_basis(const ExponentialSource& s) {
    if (s.basis == TempBasis::kelvin) return s;
    return ExponentialSource{s.alpha, s.beta,
                             s.gamma + constants::celsius_offset,
                             TempBasis::kelvin};
}

LinearSource linearize_at(const HeatSourceModel& source, Temperature t) {
    const double h = heat_rate(source, t);
    const double slope = heat_rate_slope(source, t);
    return LinearSource{slope, h - slope * t.kelvin(), TempBasis::kelvin};
}

SourceFit fit_source_polynomial(const ExponentialSource& source,
                                const TempRange& range, int order) {
    if (order < 1 || order > 3) {
        throw std::invalid_argument("fit_source_polynomial: order must be 1, 2 or 3");
    }
    if (!(range.width() > 0.0)) {
        throw DegenerateRange("fit_source_polynomial: empty fit range");
    }

    constexpr int n_samples = 256;
    const double lo = range.lo.kelvin();
    const double step = range.width() / (n_samples - 1);
    const double mid = lo + 0.5 * range.width();

    // Fit in the shifted coordinate u = T - mid for conditioning, then
    // expand the polynomial back to the kelvin axis.
    Eigen::MatrixXd vandermonde(n_samples, order + 1);
    Eigen::VectorXd rhs(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t_k = lo + i * step;
        const double u = t_k - mid;
        double p = 1.0;
        for (int j = 0; j <= order; ++j) {
            vandermonde(i, j) = p;
            p *= u;
        }
        rhs(i) = heat_rate(source, Temperature::from_kelvin(t_k));
    }
    Eigen::VectorXd coeff_u = vandermonde.colPivHouseholderQr().solve(rhs);

    // Shift u = T - mid back: accumulate c_j * (T - mid)^j.
    std::array<double, 4> coeff_t{};
    {
        const double d = -mid;
        static constexpr double binom[4][4] = {
            {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        for (int i = 0; i <= order; ++i) {
            double power = 1.0;
            for (int j = i; j >= 0; --j) {
                coeff_t[j] += coeff_u(i) * binom[i][j] * power;
                power *= d;
            }
        }
    }

    SourceFit fit;
    fit.source = CubicSource{coeff_t, TempBasis::kelvin};

    // Dense residual scan on a finer grid than the fit used.
    constexpr int n_eval = 1024;
    double max_rel = 0.0;
    for (int i = 0; i < n_eval; ++i) {
        const double t_k = lo + range.width() * i / (n_eval - 1);
        const Temperature t = Temperature::from_kelvin(t_k);
        const double truth = heat_rate(source, t);
        const double approx = heat_rate(HeatSourceModel{fit.source}, t);
        if (truth != 0.0) {
            max_rel = std::max(max_rel, std::abs(approx - truth) / std::abs(truth));
        }
    }
    fit.max_rel_error = max_rel;
    return fit;
}

} // namespace radcool
