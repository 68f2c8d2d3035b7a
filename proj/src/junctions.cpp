#include "beltflow/junctions.hpp"

#include "beltflow/analytic.hpp"
#include "beltflow/errors.hpp"

#include <algorithm>

namespace beltflow {

// How close an allocation may come to an outgoing capacity before the
// junction counts as congested for the current step.
static constexpr double kCongEps = 1e-12;

JunctionFluxes junction_fluxes_one_to_one(double rho_last_in, double rho_first_out,
                                          const FluxParams& in, const FluxParams& out) {
    double ul = detail::checked_state(in, rho_last_in, "junction one_to_one");
    double ur = detail::checked_state(out, rho_first_out, "junction one_to_one");
    double dem = demand(in, ul);
    double sup = supply(out, ur);
    double h = std::min(dem, sup);
    JunctionFluxes jf;
    jf.outflow = {h};
    jf.inflow = {h};
    jf.congested = dem > sup;
    return jf;
}

JunctionFluxes junction_fluxes_diverge(double rho_last_in,
                                       double rho_first_out2, double rho_first_out3,
                                       const FluxParams& in,
                                       const FluxParams& out2, const FluxParams& out3,
                                       double mu, bool active) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw ConfigError("diverge junction: mu out of [0,1]");
    double u1 = detail::checked_state(in, rho_last_in, "junction diverge");
    double u2 = detail::checked_state(out2, rho_first_out2, "junction diverge");
    double u3 = detail::checked_state(out3, rho_first_out3, "junction diverge");

    double d = demand(in, u1);
    double f2max = out2.max_flux();
    double f3max = out3.max_flux();
    bool congested = mu * d > f2max * (1.0 - kCongEps)
                  || (1.0 - mu) * d > f3max * (1.0 - kCongEps);

    double h2, h3;
    if (!congested) {
        h2 = mu * d;
        h3 = (1.0 - mu) * d;
    } else if (active) {
        h2 = f2max;
        h3 = f3max;
    } else {
        h2 = mu <= 0.0 ? 0.0 : std::min(f2max, mu / (1.0 - mu) * f3max);
        h3 = mu >= 1.0 ? 0.0 : std::min(f3max, (1.0 - mu) / mu * f2max);
    }
    // Downstream arcs can refuse flux only once their first cell enters the
    // mollified cap; inactive on free or exactly-at-capacity cells.
    h2 = std::min(h2, supply(out2, u2));
    h3 = std::min(h3, supply(out3, u3));

    JunctionFluxes jf;
    jf.inflow = {h2, h3};
    jf.outflow = {h2 + h3};
    jf.congested = congested;
    return jf;
}

JunctionFluxes junction_fluxes_merge(double rho_last_in1, double rho_last_in2,
                                     double rho_first_out,
                                     const FluxParams& in1, const FluxParams& in2,
                                     const FluxParams& out, double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("merge junction: q out of [0,1]");
    double u1 = detail::checked_state(in1, rho_last_in1, "junction merge");
    double u2 = detail::checked_state(in2, rho_last_in2, "junction merge");
    double uo = detail::checked_state(out, rho_first_out, "junction merge");

    double d1 = demand(in1, u1);
    double d2 = demand(in2, u2);
    double f3max = out.max_flux();
    bool congested = d1 + d2 > f3max * (1.0 - kCongEps);

    double h1, h2;
    if (!congested) {
        h1 = d1;
        h2 = d2;
    } else {
        MergeShares sh = merge_allocation(d1, d2, f3max, q);
        h1 = sh.f1;
        h2 = sh.f2;
    }
    double s = supply(out, uo);
    if (h1 + h2 > s) {
        double scale = s / (h1 + h2);
        h1 *= scale;
        h2 *= scale;
    }

    JunctionFluxes jf;
    jf.outflow = {h1, h2};
    jf.inflow = {h1 + h2};
    jf.congested = congested;
    return jf;
}

} // namespace beltflow
