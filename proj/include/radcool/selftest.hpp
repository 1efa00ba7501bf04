#ifndef RADCOOL_SELFTEST_HPP
#define RADCOOL_SELFTEST_HPP

#include <string>
#include <vector>

namespace radcool {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
};

// Runs the full verification grid (h reproduction, oracle agreement,
// radiation-fit bounds, RMSE ordering, r_cr and delta-tau landmarks,
// property suites, determinism). Deterministic output.
std::vector<CriterionResult> run_acceptance_checks();

// One line per criterion: "C<k> PASS|FAIL <title>: <detail>".
std::string format_acceptance_report(const std::vector<CriterionResult>& results);

} // namespace radcool

#endif // RADCOOL_SELFTEST_HPP
