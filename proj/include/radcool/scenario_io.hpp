#ifndef RADCOOL_SCENARIO_IO_HPP
#define RADCOOL_SCENARIO_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radcool/scenario.hpp"

namespace radcool {

// key=value overrides applied on top of the file content (CLI --set).
using KeyValueOverrides = std::vector<std::pair<std::string, std::string>>;

struct ScenarioFile {
    ThermalScenario scenario;
    // Set when the file pinned the equilibrium instead of h directly.
    std::optional<Temperature> equilibrium_hint;
};

// Flat key=value text, one key per line, '#' starts a comment.
// Keys: surface_m2, emissivity, heat_capacity_j_per_k, t_ambient_c,
// t_initial_c, exactly one of h_w_per_m2k | t_equilibrium_c, source.kind,
// source.* coefficients, source.basis, range_c=lo:hi.
ScenarioFile parse_scenario(std::istream& in,
                            const KeyValueOverrides& overrides = {},
                            NegativeH policy = NegativeH::reject);

ScenarioFile load_scenario(const std::string& path,
                           const KeyValueOverrides& overrides = {},
                           NegativeH policy = NegativeH::reject);

} // namespace radcool

#endif // RADCOOL_SCENARIO_IO_HPP
