#include "beltflow/flux.hpp"

#include "beltflow/network.hpp"

#include <sstream>

namespace beltflow {

FluxParams::FluxParams(double velocity, double capacity, double smoothing)
    : a_(velocity), rho_max_(capacity), delta_(smoothing) {
    if (!(a_ > 0.0)) throw ConfigError("flux velocity must be positive");
    if (!(rho_max_ > 0.0)) throw ConfigError("flux capacity must be positive");
    if (!(delta_ > 0.0)) throw ConfigError("flux smoothing width must be positive");
    rho_zero_ = rho_max_ + delta_;
    // Stationary point of a*rho*(1 - Phi) on the first cap piece; with
    // u = 2(rho - rho_max)/delta it solves (3 delta/4) u^2 + rho_max u = delta/2,
    // and always lies in (0, 1): the peak sits in the first half of the cap.
    double u = (-rho_max_ + std::sqrt(rho_max_ * rho_max_ + 1.5 * delta_ * delta_)) / (1.5 * delta_);
    peak_rho_ = rho_max_ + 0.5 * delta_ * u;
    peak_flux_ = regularized_flux(*this, peak_rho_);
}

namespace detail {
void throw_state_out_of_range(const char* where, double rho, double hi) {
    std::ostringstream os;
    os << where << ": density " << rho << " outside [0, " << hi
       << "] (capacity + smoothing); max principle broken upstream";
    throw NumericError(os.str());
}
} // namespace detail

double cfl_max_timestep(const Network& network, double delta, double dx) {
    if (!(dx > 0.0)) throw ConfigError("cfl_max_timestep: dx must be positive");
    if (!(delta > 0.0)) throw ConfigError("cfl_max_timestep: delta must be positive");
    std::size_t max_in = 1;
    for (const JunctionSpec& j : network.junctions)
        max_in = std::max(max_in, j.in_arcs.size());
    return dx * delta / (2.0 * static_cast<double>(max_in));
}

} // namespace beltflow
