#pragma once

#include "beltflow/network.hpp"
#include "beltflow/profile.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace beltflow {

/// Everything needed to run (and compare) one simulation: network, initial
/// data, horizon and discretization. The unit of work for the solver, the
/// analytic oracle and the CLI.
struct Scenario {
    std::string name;
    Network network;
    std::map<ArcId, Profile> initial; ///< arcs absent here start empty
    double horizon = 0.0;
    double dx = 5e-3;
    double dt = 1e-5;
    double delta = 1e-2; ///< flux smoothing width
    std::vector<double> output_times;
    /// External inflow per source junction (index into network.junctions);
    /// absent entries mean zero inflow.
    std::map<int, std::function<double(double)>> source_inflow;
};

/// k*T/100 for k = 1..count.
std::vector<double> uniform_output_times(double horizon, int count = 100);

/// The five reference scenarios: test1/test2 (one-to-one, free flow vs
/// congested), test3_passive/test4_active (one-to-two), test5_merge
/// (two-to-one, q = 0.3). Gaussian initial hump on every feeding arc,
/// dx = 5e-3, dt = 1e-5, delta = 1e-2, unit capacities.
Scenario builtin_scenario(const std::string& name);

/// Names accepted by builtin_scenario.
const std::vector<std::string>& builtin_scenario_names();

} // namespace beltflow
