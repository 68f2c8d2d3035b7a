#pragma once

#include "beltflow/network.hpp"

#include <map>

namespace beltflow {

/// Uniform cell layout on one arc. All arcs of a simulation share the same
/// dx; the requested spacing is snapped per arc so that n_cells * dx matches
/// the arc length exactly.
struct ArcGrid {
    ArcId arc_id;
    int n_cells = 0;
    double dx = 0.0;
    double x_lo = 0.0;

    double center(int j) const { return x_lo + (j + 0.5) * dx; }
};

/// Builds grids for every arc at (approximately) the requested spacing.
/// Throws ConfigError if the arcs' lengths are not commensurate, i.e. the
/// snapped spacings disagree beyond 1e-9 relative.
std::map<ArcId, ArcGrid> build_grids(const Network& network, double dx_requested);

} // namespace beltflow
