#include "beltflow/grid.hpp"

#include "beltflow/errors.hpp"

#include <cmath>
#include <sstream>

namespace beltflow {

std::map<ArcId, ArcGrid> build_grids(const Network& network, double dx_requested) {
    if (!(dx_requested > 0.0)) throw ConfigError("build_grids: dx must be positive");
    if (network.arcs.empty()) throw ConfigError("build_grids: network has no arcs");

    std::map<ArcId, ArcGrid> grids;
    double dx_common = 0.0;
    for (const auto& [id, arc] : network.arcs) {
        double len = arc.length();
        int n = static_cast<int>(std::max(1.0, std::llround(len / dx_requested) * 1.0));
        double dx = len / n;
        if (dx_common == 0.0) {
            dx_common = dx;
        } else if (std::abs(dx - dx_common) > 1e-12 * dx_common) {
            std::ostringstream os;
            os << "build_grids: arc '" << id << "' (length " << len
               << ") is not commensurate with dx=" << dx_common
               << "; all arcs must share one cell size";
            throw ConfigError(os.str());
        }
        grids[id] = ArcGrid{id, n, dx, arc.lo};
    }
    return grids;
}

} // namespace beltflow
