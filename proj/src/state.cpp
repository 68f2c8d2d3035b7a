#include "beltflow/state.hpp"

namespace beltflow {

double total_mass(const NetworkState& state, const std::map<ArcId, ArcGrid>& grids) {
    double mass = 0.0;
    for (const auto& [id, grid] : grids) {
        auto it = state.fields.find(id);
        if (it == state.fields.end()) continue;
        double s = 0.0;
        for (double v : it->second) s += v;
        mass += s * grid.dx;
    }
    return mass;
}

} // namespace beltflow
