#pragma once

#include "beltflow/flux.hpp"

#include <vector>

namespace beltflow {

/// Boundary fluxes a junction grants for the current step. `outflow[k]` is
/// what the k-th incoming arc's last cell loses, `inflow[k]` what the k-th
/// outgoing arc's first cell gains. Conservation holds bit-exactly: the
/// total is assembled from the same floating-point terms on both sides.
struct JunctionFluxes {
    std::vector<double> outflow;
    std::vector<double> inflow;
    bool congested = false;

    double total_out() const {
        double s = 0.0;
        for (double v : outflow) s += v;
        return s;
    }
    double total_in() const {
        double s = 0.0;
        for (double v : inflow) s += v;
        return s;
    }
};

/// One-to-one coupling: min(upstream demand, downstream supply). Reduces to
/// the plain Godunov flux when both arcs share the same flux parameters.
JunctionFluxes junction_fluxes_one_to_one(double rho_last_in, double rho_first_out,
                                          const FluxParams& in, const FluxParams& out);

/// One-to-two coupling. Non-congested: the arriving flux is split mu : 1-mu.
/// Congested passive: each outgoing arc receives min(own capacity flux,
/// ratio-scaled partner capacity flux). Congested active: each outgoing arc
/// receives its capacity flux. Either way inflows are capped by the
/// downstream supply and the outflow is their exact sum.
JunctionFluxes junction_fluxes_diverge(double rho_last_in,
                                       double rho_first_out2, double rho_first_out3,
                                       const FluxParams& in,
                                       const FluxParams& out2, const FluxParams& out3,
                                       double mu, bool active);

/// Two-to-one coupling. Non-congested: both arcs forward their demand.
/// Congested: the outgoing capacity flux is divided q : 1-q, with the share
/// point projected onto the feasible region when one arc cannot fill its
/// share (the other arc receives the remainder).
JunctionFluxes junction_fluxes_merge(double rho_last_in1, double rho_last_in2,
                                     double rho_first_out,
                                     const FluxParams& in1, const FluxParams& in2,
                                     const FluxParams& out, double q);

} // namespace beltflow
