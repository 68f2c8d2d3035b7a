#pragma once

#include "beltflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace beltflow {

struct Network; // network.hpp

/// Per-arc flux description: linear transport a*rho with a hard density cap,
/// plus the mollified cap of width `smoothing` used by the numerical scheme.
///
/// The exact flux is a*rho*H(rho_max - rho) with the convention H(0)=0, so it
/// equals a*rho below capacity and 0 at and above it. The regularized flux
/// agrees with the exact one on [0, rho_max], rises to a small peak just
/// above rho_max and decays C^1-smoothly to zero at rho_max + smoothing.
class FluxParams {
public:
    FluxParams(double velocity, double capacity, double smoothing);

    double velocity() const { return a_; }
    double capacity() const { return rho_max_; }
    double smoothing() const { return delta_; }

    /// Density at which the regularized flux vanishes (rho_max + smoothing).
    double zero_density() const { return rho_zero_; }
    /// Argmax of the regularized flux (slightly above rho_max).
    double peak_density() const { return peak_rho_; }
    /// Maximum of the regularized flux.
    double peak_flux() const { return peak_flux_; }
    /// Capacity flux a * rho_max.
    double max_flux() const { return a_ * rho_max_; }

    /// True if smoothing > capacity/10 (regularization too coarse for the cap).
    bool smoothing_is_coarse() const { return delta_ > rho_max_ / 10.0; }

private:
    double a_, rho_max_, delta_;
    double rho_zero_;
    double peak_rho_, peak_flux_;
};

/// Triangular Friedrichs mollifier scaled to width delta:
/// (2/delta)*max(0, 1 - |2y/delta|); even, supported on [-delta/2, delta/2],
/// unit integral.
inline double mollifier(double delta, double y) {
    double s = std::abs(2.0 * y / delta);
    return s >= 1.0 ? 0.0 : (2.0 / delta) * (1.0 - s);
}

/// Integral of the mollifier from -delta/2 to y (0 below the support,
/// 1 above it). Piecewise quadratic, exact.
inline double mollifier_cdf(double delta, double y) {
    double s = 2.0 * y / delta;
    if (s <= -1.0) return 0.0;
    if (s >= 1.0) return 1.0;
    if (s <= 0.0) {
        double w = 1.0 + s;
        return 0.5 * w * w;
    }
    double w = 1.0 - s;
    return 1.0 - 0.5 * w * w;
}

/// Discontinuous flux a*rho*H(rho_max - rho), H(0)=0.
inline double exact_flux(const FluxParams& p, double rho) {
    return rho < p.capacity() ? p.velocity() * rho : 0.0;
}

/// C^1 regularization of the exact flux, evaluated via the closed-form
/// antiderivative of the triangular mollifier.
inline double regularized_flux(const FluxParams& p, double rho) {
    if (rho <= p.capacity()) return p.velocity() * rho;
    if (rho >= p.zero_density()) return 0.0;
    double cdf = mollifier_cdf(p.smoothing(), rho - p.capacity() - 0.5 * p.smoothing());
    return p.velocity() * rho * (1.0 - cdf);
}

/// Exact derivative of regularized_flux: a on [0, rho_max], 0 beyond
/// rho_max + smoothing, the product-rule value across the cap.
inline double regularized_flux_derivative(const FluxParams& p, double rho) {
    if (rho <= p.capacity()) return p.velocity();
    if (rho >= p.zero_density()) return 0.0;
    double y = rho - p.capacity() - 0.5 * p.smoothing();
    return p.velocity() * (1.0 - mollifier_cdf(p.smoothing(), y))
         - p.velocity() * rho * mollifier(p.smoothing(), y);
}

namespace detail {
[[noreturn]] void throw_state_out_of_range(const char* where, double rho, double hi);

inline double checked_state(const FluxParams& p, double rho, const char* where) {
    const double hi = p.zero_density();
    const double slack = 1e-12 * hi;
    if (!(rho >= -slack && rho <= hi + slack)) throw_state_out_of_range(where, rho, hi);
    return std::clamp(rho, 0.0, hi);
}
} // namespace detail

/// Godunov two-point flux for the regularized flux: interval min for
/// rho_left <= rho_right, interval max otherwise. States must lie in
/// [0, rho_max + smoothing] (up to roundoff slack); anything else signals a
/// broken max principle upstream and raises NumericError.
inline double godunov_flux(const FluxParams& p, double rho_left, double rho_right) {
    double ul = detail::checked_state(p, rho_left, "godunov_flux");
    double ur = detail::checked_state(p, rho_right, "godunov_flux");
    if (ul <= p.capacity() && ur <= p.capacity()) return p.velocity() * ul; // upwind on the linear branch
    double fl = regularized_flux(p, ul);
    double fr = regularized_flux(p, ur);
    if (ul <= ur) return std::min(fl, fr);
    double m = std::max(fl, fr);
    if (ur <= p.peak_density() && p.peak_density() <= ul) m = p.peak_flux();
    return m;
}

/// Largest flux the upstream side can push given its trace density
/// (the rising branch value, saturating at the peak).
inline double demand(const FluxParams& p, double rho) {
    return rho <= p.peak_density() ? regularized_flux(p, rho) : p.peak_flux();
}

/// Largest flux the downstream side can absorb given its trace density
/// (the peak until the cap region, then the decaying branch).
inline double supply(const FluxParams& p, double rho) {
    return rho <= p.peak_density() ? p.peak_flux() : regularized_flux(p, rho);
}

/// Largest stable time step on `network` for spacing dx and smoothing delta:
/// dx / (max_in_degree * 2/delta), i.e. dx*delta/4 once a merge is present.
double cfl_max_timestep(const Network& network, double delta, double dx);

} // namespace beltflow
