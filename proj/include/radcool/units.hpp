#ifndef RADCOOL_UNITS_HPP
#define RADCOOL_UNITS_HPP

#include <cmath>
#include <stdexcept>

namespace radcool {

namespace constants {
// Stefan-Boltzmann constant [W/(m^2*K^4)].
inline constexpr double stefan_boltzmann = 5.670e-8;
inline constexpr double celsius_offset = 273.15;
} // namespace constants

// Absolute temperature. All internal computation is done in kelvin;
// celsius appears only at I/O boundaries.
class Temperature {
public:
    Temperature() = default;

    static Temperature from_kelvin(double k) {
        if (!(k > 0.0) || !std::isfinite(k)) {
            throw std::invalid_argument(
                "Temperature: kelvin value must be finite and > 0");
        }
        Temperature t;
        t.kelvin_ = k;
        return t;
    }

    static Temperature from_celsius(double c) {
        return from_kelvin(c + constants::celsius_offset);
    }

    double kelvin() const noexcept { return kelvin_; }
    double celsius() const noexcept { return kelvin_ - constants::celsius_offset; }

    friend bool operator==(Temperature a, Temperature b) noexcept {
        return a.kelvin_ == b.kelvin_;
    }
    friend auto operator<=>(Temperature a, Temperature b) noexcept {
        return a.kelvin_ <=> b.kelvin_;
    }

private:
    double kelvin_ = constants::celsius_offset; // 0 degC
};

// Difference in kelvin (== difference in celsius).
inline double operator-(Temperature a, Temperature b) noexcept {
    return a.kelvin() - b.kelvin();
}

// Declared operating range of a scenario, lo < hi.
struct TempRange {
    Temperature lo;
    Temperature hi;

    bool contains(Temperature t) const noexcept {
        return t.kelvin() >= lo.kelvin() && t.kelvin() <= hi.kelvin();
    }
    double width() const noexcept { return hi.kelvin() - lo.kelvin(); }
};

inline TempRange make_range(Temperature lo, Temperature hi) {
    if (!(lo.kelvin() < hi.kelvin())) {
        throw std::invalid_argument("TempRange: lo must be < hi");
    }
    return TempRange{lo, hi};
}

} // namespace radcool

#endif // RADCOOL_UNITS_HPP
