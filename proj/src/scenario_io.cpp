#include "radcool/scenario_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace radcool {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("scenario: bad number for " + key + ": '" +
                                    value + "'");
    }
    if (pos != value.size()) {
        throw std::invalid_argument("scenario: trailing junk after " + key +
                                    ": '" + value + "'");
    }
    return parsed;
}

TempBasis to_basis(const std::string& value) {
    if (value == "kelvin") return TempBasis::kelvin;
    if (value == "celsius") return TempBasis::celsius;
    throw std::invalid_argument("scenario: source.basis must be kelvin or celsius");
}

} // namespace

ScenarioFile parse_scenario(std::istream& in, const KeyValueOverrides& overrides,
                            NegativeH policy) {
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("scenario: line " +
                                        std::to_string(line_no) +
                                        " is not key=value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    for (const auto& [key, value] : overrides) {
        kv[key] = value;
    }

    auto take = [&kv](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string value = it->second;
        kv.erase(it);
        return value;
    };
    auto require = [&take](const std::string& key) {
        auto value = take(key);
        if (!value) {
            throw std::invalid_argument("scenario: missing key " + key);
        }
        return *value;
    };

    ScenarioSpec spec;
    spec.surface_m2 = to_double("surface_m2", require("surface_m2"));
    spec.emissivity = to_double("emissivity", require("emissivity"));
    spec.heat_capacity =
        to_double("heat_capacity_j_per_k", require("heat_capacity_j_per_k"));
    spec.ambient = Temperature::from_celsius(
        to_double("t_ambient_c", require("t_ambient_c")));
    spec.initial = Temperature::from_celsius(
        to_double("t_initial_c", require("t_initial_c")));

    {
        const std::string range = require("range_c");
        const auto colon = range.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("scenario: range_c must be lo:hi");
        }
        spec.temp_range = make_range(
            Temperature::from_celsius(
                to_double("range_c", trim(range.substr(0, colon)))),
            Temperature::from_celsius(
                to_double("range_c", trim(range.substr(colon + 1)))));
    }

    const std::string kind = require("source.kind");
    const TempBasis basis = to_basis(require("source.basis"));
    if (kind == "linear") {
        spec.source = LinearSource{to_double("source.eta1", require("source.eta1")),
                                   to_double("source.eta0", require("source.eta0")),
                                   basis};
    } else if (kind == "cubic") {
        CubicSource src;
        src.basis = basis;
        for (int i = 0; i < 4; ++i) {
            const std::string key = "source.kappa" + std::to_string(i);
            src.kappa[i] = to_double(key, require(key));
        }
        spec.source = src;
    } else if (kind == "exponential") {
        spec.source =
            ExponentialSource{to_double("source.alpha", require("source.alpha")),
                              to_double("source.beta", require("source.beta")),
                              to_double("source.gamma", require("source.gamma")),
                              basis};
    } else {
        throw std::invalid_argument(
            "scenario: source.kind must be linear, cubic or exponential");
    }

    const auto h_value = take("h_w_per_m2k");
    const auto te_value = take("t_equilibrium_c");
    if (h_value.has_value() == te_value.has_value()) {
        throw std::invalid_argument(
            "scenario: exactly one of h_w_per_m2k or t_equilibrium_c required");
    }

    if (!kv.empty()) {
        throw std::invalid_argument("scenario: unknown key " + kv.begin()->first);
    }

    ScenarioFile file;
    if (h_value) {
        file.scenario = with_h(spec, to_double("h_w_per_m2k", *h_value), policy);
    } else {
        const Temperature te = Temperature::from_celsius(
            to_double("t_equilibrium_c", *te_value));
        file.scenario = with_equilibrium_passive(spec, te, policy);
        file.equilibrium_hint = te;
    }
    return file;
}

ScenarioFile load_scenario(const std::string& path,
                           const KeyValueOverrides& overrides,
                           NegativeH policy) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("scenario: cannot open " + path);
    }
    return parse_scenario(in, overrides, policy);
}

} // namespace radcool
