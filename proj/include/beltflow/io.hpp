#pragma once

#include "beltflow/analytic.hpp"
#include "beltflow/experiments.hpp"
#include "beltflow/solver.hpp"

#include <string>
#include <vector>

namespace beltflow {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Per-snapshot cell values: header "arc_id,x,t,rho", one row per cell per
/// frame, arcs in id order, cells left to right, frames in time order.
std::string fields_csv(const Trajectory& trajectory);

/// Same layout with the oracle sampled on the trajectory grid.
std::string analytic_fields_csv(const Trajectory& trajectory, const AnalyticSolution& oracle);

/// Pointwise comparison: "arc_id,x,t,numeric,exact,diff".
std::string compare_csv(const Trajectory& trajectory, const AnalyticSolution& oracle);

/// Study table: "dx,dt,delta,l2_error,runtime_s".
std::string study_csv(const std::vector<ErrorReport>& reports);

/// Binary PGM (P5) space-time raster for one arc: one row per frame (time
/// increasing downward), one column per cell; density 0 maps to white,
/// capacity + smoothing to black.
std::string raster_pgm(const Trajectory& trajectory, const ArcId& arc,
                       double rho_max, double delta);

void write_file(const std::string& path, const std::string& content);

} // namespace beltflow
