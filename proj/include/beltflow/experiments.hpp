#pragma once

#include "beltflow/analytic.hpp"
#include "beltflow/scenario.hpp"
#include "beltflow/solver.hpp"

#include <utility>
#include <vector>

namespace beltflow {

struct ErrorReport {
    double dx = 0.0;
    double dt = 0.0;
    double delta = 0.0;
    double l2_error = 0.0;
    double runtime_seconds = 0.0;
};

/// Time-averaged discrete L2 distance between a trajectory and the oracle:
/// sqrt( (1/N) sum_frames sum_cells dx * (rho_num - rho_exact)^2 ), taken
/// over every stored frame. Zero iff the fields agree on the shared grid.
double l2_error(const Trajectory& trajectory, const AnalyticSolution& oracle);

/// Runs `base` at each (dx, dt) row and reports the oracle error per row,
/// in input order. Rows are independent; up to BELTFLOW_THREADS run
/// concurrently.
std::vector<ErrorReport> convergence_study(const Scenario& base,
                                           const std::vector<std::pair<double, double>>& rows);

/// Runs `base` at fixed (dx, dt) for each smoothing width in `deltas`.
std::vector<ErrorReport> smoothing_study(const Scenario& base,
                                         const std::vector<double>& deltas,
                                         double dx, double dt);

/// Row-level parallelism cap: BELTFLOW_THREADS env var, else hardware.
int study_thread_cap();

} // namespace beltflow
