#pragma once

#include "beltflow/flux.hpp"
#include "beltflow/network.hpp"
#include "beltflow/profile.hpp"
#include "beltflow/scenario.hpp"

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace beltflow {

/// One congested episode at a junction: the backlog exists on
/// (t_start, t_end). An episode still open at the study horizon keeps
/// t_end = +infinity.
struct CongestionWindow {
    double t_start = 0.0;
    double t_end = std::numeric_limits<double>::infinity();

    bool closed() const { return std::isfinite(t_end); }
    bool contains(double t) const { return t > t_start && t < t_end; }
};

/// Moving left boundary g(t) <= 0 of the congested region on one incoming
/// arc, in junction-relative coordinates. Defined implicitly by the mass
/// balance between arrived and granted flux; evaluated by bisection.
class InterfaceG {
public:
    /// granted(t): cumulative flux granted to this arc on [window.t_start, t].
    InterfaceG(Profile profile, double velocity, double capacity,
               double junction_pos, double arc_lo,
               std::vector<CongestionWindow> windows,
               std::function<double(double)> granted);

    /// 0 outside every window; the (clamped) root of the balance inside.
    /// Throws NumericError("congestion overflow ...") if the backlog reaches
    /// the upstream end of the arc.
    double g(double t) const;

    const std::vector<CongestionWindow>& windows() const { return windows_; }
    bool congested_at(double t) const;

    /// Balance residual R(x, t) in junction-relative x (root in x = g).
    double residual(double x, double t) const;

private:
    Profile profile_;
    double a_, rho_max_, junction_pos_, arc_lo_;
    std::vector<CongestionWindow> windows_;
    std::function<double(double)> granted_;
};

/// Scan step used to bracket congestion onsets/offsets before bisection.
/// Episodes shorter than this can be missed (documented limitation).
inline constexpr double kCongestionScanStep = 1e-4;
/// Bisection tolerance for times and interface positions.
inline constexpr double kRootTol = 1e-10;

/// First t >= t_from in [t_from, horizon] at which `excess` becomes
/// positive, located by scan + bisection; nullopt if it never does.
std::optional<double> first_sign_change(const std::function<double(double)>& excess,
                                        double t_from, double horizon);

/// First time the flux arriving at the junction exceeds threshold_flux:
/// inf{ t >= t_from : a * rho0(J - a t) > threshold_flux }.
std::optional<double> first_congestion_time(const Profile& rho0, double velocity,
                                            double junction_pos,
                                            double threshold_flux,
                                            double t_from, double horizon);

/// Transport speed inside a congested region: granted outflow divided by
/// the upstream capacity; always below the upstream belt speed.
double congested_velocity(double exiting_flux, double capacity_in);

/// One wave of a Riemann solution: states left/right of a line x = speed*t.
struct Wave {
    double speed = 0.0;
    double left = 0.0;
    double right = 0.0;
};

/// Exact Riemann solution at a one-to-one junction (initial states rho_l on
/// the incoming, rho_r on the outgoing arc). Free flow: a stationary
/// rescaling contact and the a2-speed front. Congested: three shocks, the
/// left one carrying the backlog boundary (speed -infinity when
/// rho_l = capacity_in). No rarefactions occur.
std::vector<Wave> riemann_one_to_one(double rho_l, double rho_r,
                                     const FluxParams& in, const FluxParams& out);

/// Split fractions (beta2, beta3) of an active diverge given the upstream
/// trace density. Free flow keeps (mu, 1-mu); between the passive threshold
/// and total outgoing capacity the split adapts per arc; at and beyond
/// capacity it equals the capacity ratio.
std::pair<double, double> beta_active(double rho_trace, double mu,
                                      double a1, double a2, double a3,
                                      double rho_max2, double rho_max3);

/// Merge share selection: the priority point (q*f3max, (1-q)*f3max)
/// projected onto the admissible region {0 <= f_i <= f_i_max,
/// f1 + f2 <= f3max} along the maximal-throughput line. Returns the granted
/// fluxes and the effective q.
struct MergeShares {
    double f1 = 0.0, f2 = 0.0;
    double q_effective = 0.0;
};
MergeShares merge_allocation(double f1max, double f2max, double f3max, double q);

/// Closed-form reference solution for a single-junction scenario
/// (one-to-one, diverge passive/active, or merge). Construction computes
/// the congestion windows and interfaces; evaluation is pure and
/// thread-safe afterwards.
class AnalyticSolution {
public:
    double evaluate(const ArcId& arc, double x, double t) const;

    /// Interface tracker of an incoming arc ("1" or, for merges, "2").
    const InterfaceG& interface(const ArcId& arc) const;

    /// Earliest congestion onset over the incoming arcs, nullopt if the
    /// scenario stays free-flowing.
    std::optional<double> first_congestion() const;
    /// End of the episode starting at first_congestion().
    std::optional<double> first_congestion_end() const;

    double horizon() const { return horizon_; }

    struct Impl;
    explicit AnalyticSolution(std::shared_ptr<const Impl> impl);

private:
    std::shared_ptr<const Impl> impl_;
    double horizon_ = 0.0;
};

/// Builds the oracle for `scenario`. Throws ConfigError("no analytic
/// oracle ...") unless the network is a single interior junction of one of
/// the three supported kinds.
AnalyticSolution build_analytic(const Scenario& scenario);

} // namespace beltflow
