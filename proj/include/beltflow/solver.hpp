#pragma once

#include "beltflow/flux.hpp"
#include "beltflow/grid.hpp"
#include "beltflow/junctions.hpp"
#include "beltflow/scenario.hpp"
#include "beltflow/state.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace beltflow {

/// One stored snapshot plus the cumulative boundary-flux integrals up to its
/// time, so mass audits can check mass(t) - mass(0) = inflow - outflow.
struct Frame {
    double time = 0.0;
    NetworkState state;
    double inflow_integral = 0.0;  ///< source inflow integrated over [0, t]
    double outflow_integral = 0.0; ///< sink outflow integrated over [0, t]
};

struct Trajectory {
    std::map<ArcId, ArcGrid> grids;
    std::vector<Frame> frames;
};

/// Explicit Godunov time stepper over the whole network. Interior cells use
/// the two-point flux of their own arc; first/last cells use the
/// junction-granted inflow/outflow. One Simulator instance is strictly
/// sequential; distinct instances may run concurrently over the same
/// immutable Scenario.
class Simulator {
public:
    /// Validates the network, builds grids, checks the CFL bound (throws
    /// CflError naming the largest admissible dt) and samples the initial
    /// profiles at cell centers. If `initial` is given it replaces the
    /// sampled fields (sizes must match the grids).
    explicit Simulator(const Scenario& scenario, const NetworkState* initial = nullptr);

    /// Advances by one dt. Throws NumericError on non-finite values, naming
    /// the offending arc and cell.
    void step();

    NetworkState snapshot() const;
    double time() const { return time_; }
    double dt() const { return dt_; }
    const std::map<ArcId, ArcGrid>& grids() const { return grids_; }

    double inflow_integral() const { return inflow_integral_; }
    double outflow_integral() const { return outflow_integral_; }

private:
    struct ArcRt {
        ArcId id;
        FluxParams flux;
        ArcGrid grid;
        std::vector<double> rho, rho_next;
        double h_in = 0.0, h_out = 0.0;
    };
    struct JunctionRt {
        JunctionKind kind = JunctionKind::Source;
        std::vector<int> in, out; // indices into arcs_
        double mu = 0.0, q = 0.0;
        std::function<double(double)> inflow; // sources only, may be empty
    };

    void apply_junction_fluxes();
    void advance_arcs();

    std::vector<ArcRt> arcs_;
    std::vector<JunctionRt> junctions_;
    std::map<ArcId, ArcGrid> grids_;
    double dt_ = 0.0;
    double time0_ = 0.0, time_ = 0.0;
    long step_count_ = 0;
    double inflow_integral_ = 0.0, outflow_integral_ = 0.0;
};

/// Single scheme update on an externally held state (wrapper over Simulator
/// for tests and bindings).
NetworkState step(const NetworkState& state, const Scenario& scenario, double dt);

/// Runs scenario from t = 0 to the horizon, invoking `sink` at t = 0 and at
/// every requested output time (snapped to the nearest step).
void run_simulation(const Scenario& scenario,
                    const std::function<void(const Frame&)>& sink);

/// Same, collecting the frames.
Trajectory run_simulation(const Scenario& scenario);

} // namespace beltflow
