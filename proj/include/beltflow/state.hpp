#pragma once

#include "beltflow/grid.hpp"
#include "beltflow/network.hpp"

#include <map>
#include <vector>

namespace beltflow {

/// Piecewise-constant density approximation on the whole network at one
/// discrete time. Cell values live in [0, capacity + smoothing] (discrete
/// max principle).
struct NetworkState {
    double time = 0.0;
    std::map<ArcId, std::vector<double>> fields;
};

/// Sum of rho * dx over all cells of all arcs.
double total_mass(const NetworkState& state, const std::map<ArcId, ArcGrid>& grids);

} // namespace beltflow
