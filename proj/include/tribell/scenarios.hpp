#pragma once

#include <string>
#include <vector>

#include "tribell/optimize.hpp"

namespace tribell {

// One published reference point: a state, a representative setting choice
// (the n = 0 member where a whole family of angles works), and the expected
// magnitudes of M, M' and S_V with the tolerance each value was quoted at.
struct ScenarioCell {
    std::string quantity; // "M", "M_PRIME" or "S_V"
    double expected = 0.0;
    double tolerance = 0.0;
};

struct Scenario {
    std::string id; // "S1".."S8"
    std::string description;
    bool w_state = false; // false -> GHZ
    SettingsHextet settings;
    std::vector<ScenarioCell> cells;

    // Scenarios that sit at an optimum also get re-derived by the optimizer.
    bool run_optimizer = false;
    Objective opt_objective = Objective::AbsSv;
    ParamKind opt_param = ParamKind::XyPlanar;
    double opt_expected = 0.0;
    double opt_tolerance = 0.0;
};

const std::vector<Scenario>& all_scenarios();

// |quantity| of the scenario's state at its settings.
double scenario_value(const Scenario& scenario, const std::string& quantity);

} // namespace tribell
