#ifndef RADCOOL_ERRORS_HPP
#define RADCOOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace radcool {

// Base class for every named domain error. The name is stable and machine
// readable; the CLI prints diagnostics as "error: <name>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RADCOOL_DEFINE_ERROR(NAME)                                     \
    class NAME : public Error {                                        \
    public:                                                            \
        explicit NAME(const std::string& detail) : Error(#NAME, detail) {} \
    }

RADCOOL_DEFINE_ERROR(EquilibriumBelowAmbient);
RADCOOL_DEFINE_ERROR(UnstableSystem);
RADCOOL_DEFINE_ERROR(UnstableEquilibrium);
RADCOOL_DEFINE_ERROR(DegenerateRange);
RADCOOL_DEFINE_ERROR(DegenerateRadiation);
RADCOOL_DEFINE_ERROR(NonPolynomialSource);
RADCOOL_DEFINE_ERROR(UnexpectedRootStructure);
RADCOOL_DEFINE_ERROR(RepeatedRealRoot);
RADCOOL_DEFINE_ERROR(OutOfBasin);
RADCOOL_DEFINE_ERROR(AtEquilibrium);
RADCOOL_DEFINE_ERROR(ComplexRoots);
RADCOOL_DEFINE_ERROR(WrongSignKappa2);
RADCOOL_DEFINE_ERROR(ZeroHeatSource);
RADCOOL_DEFINE_ERROR(StepUnderflow);
RADCOOL_DEFINE_ERROR(NeverReached);

#undef RADCOOL_DEFINE_ERROR

} // namespace radcool

#endif // RADCOOL_ERRORS_HPP
