#include "beltflow/analytic.hpp"

#include "beltflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace beltflow {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::optional<double> first_sign_change(const std::function<double(double)>& excess,
                                        double t_from, double horizon) {
    if (t_from > horizon) return std::nullopt;
    if (excess(t_from) > 0.0) return t_from;
    double prev = t_from;
    while (prev < horizon) {
        double t = std::min(prev + kCongestionScanStep, horizon);
        if (excess(t) > 0.0) {
            double a = prev, b = t;
            for (int i = 0; i < 200 && b - a > kRootTol; ++i) {
                double m = 0.5 * (a + b);
                (excess(m) > 0.0 ? b : a) = m;
            }
            return 0.5 * (a + b);
        }
        if (t >= horizon) break;
        prev = t;
    }
    return std::nullopt;
}

std::optional<double> first_congestion_time(const Profile& rho0, double velocity,
                                            double junction_pos, double threshold_flux,
                                            double t_from, double horizon) {
    auto excess = [&rho0, velocity, junction_pos, threshold_flux](double t) {
        return velocity * rho0(junction_pos - velocity * t) - threshold_flux;
    };
    return first_sign_change(excess, t_from, horizon);
}

double congested_velocity(double exiting_flux, double capacity_in) {
    if (!(capacity_in > 0.0))
        throw ConfigError("congested_velocity: upstream capacity must be positive");
    return exiting_flux / capacity_in;
}

// ---------------------------------------------------------------------------
// InterfaceG

namespace {
const CongestionWindow* find_window(const std::vector<CongestionWindow>& ws, double t) {
    for (const CongestionWindow& w : ws)
        if (w.contains(t)) return &w;
    return nullptr;
}
} // namespace

InterfaceG::InterfaceG(Profile profile, double velocity, double capacity,
                       double junction_pos, double arc_lo,
                       std::vector<CongestionWindow> windows,
                       std::function<double(double)> granted)
    : profile_(std::move(profile)), a_(velocity), rho_max_(capacity),
      junction_pos_(junction_pos), arc_lo_(arc_lo),
      windows_(std::move(windows)), granted_(std::move(granted)) {}

bool InterfaceG::congested_at(double t) const {
    return find_window(windows_, t) != nullptr;
}

double InterfaceG::residual(double x, double t) const {
    const CongestionWindow* w = find_window(windows_, t);
    double t0 = w ? w->t_start : t;
    return -x + granted_(t) / rho_max_
           - profile_.integral(junction_pos_ + x - a_ * t, junction_pos_ - a_ * t0) / rho_max_;
}

double InterfaceG::g(double t) const {
    if (!find_window(windows_, t)) return 0.0;
    if (residual(0.0, t) >= 0.0) return 0.0;
    double lo = arc_lo_ - junction_pos_;
    if (residual(lo, t) < 0.0) {
        std::ostringstream os;
        os << "congestion overflow: backlog reaches the upstream end of the arc at t=" << t;
        throw NumericError(os.str());
    }
    double a = lo, b = 0.0; // residual nonincreasing in x: R(a) >= 0 > R(b)
    for (int i = 0; i < 200 && b - a > kRootTol; ++i) {
        double m = 0.5 * (a + b);
        (residual(m, t) >= 0.0 ? a : b) = m;
    }
    return std::min(0.5 * (a + b), 0.0);
}

// ---------------------------------------------------------------------------
// Riemann problem, active split, merge shares

std::vector<Wave> riemann_one_to_one(double rho_l, double rho_r,
                                     const FluxParams& in, const FluxParams& out) {
    if (!(rho_l >= 0.0 && rho_l <= in.capacity()) ||
        !(rho_r >= 0.0 && rho_r <= out.capacity()))
        throw ConfigError("riemann_one_to_one: states must lie in [0, capacity]");

    double f1 = in.velocity() * rho_l; // upwind arriving flux (linear branch)
    double f2max = out.max_flux();
    std::vector<Wave> waves;
    if (f1 <= f2max) {
        double mid = in.velocity() / out.velocity() * rho_l;
        waves.push_back({0.0, rho_l, mid});
        waves.push_back({out.velocity(), mid, rho_r});
    } else {
        double sl = rho_l >= in.capacity()
                        ? -kInf
                        : (f2max - f1) / (in.capacity() - rho_l);
        waves.push_back({sl, rho_l, in.capacity()});
        waves.push_back({0.0, in.capacity(), out.capacity()});
        waves.push_back({out.velocity(), out.capacity(), rho_r});
    }
    return waves;
}

std::pair<double, double> beta_active(double rho_trace, double mu,
                                      double a1, double a2, double a3,
                                      double rho_max2, double rho_max3) {
    double alpha2 = mu, alpha3 = 1.0 - mu;
    if (rho_trace <= 0.0) return {alpha2, alpha3};
    double f2max = a2 * rho_max2, f3max = a3 * rho_max3;
    double cap2 = f2max / (f2max + f3max), cap3 = f3max / (f2max + f3max);
    double f1 = a1 * rho_trace;
    if (alpha2 * f1 <= f2max && alpha3 * f1 <= f3max) return {alpha2, alpha3};
    if (f1 >= f2max + f3max) return {cap2, cap3};
    // Partial regime: lift each split to the least congestion-avoiding value,
    // never beyond the throughput-optimal capacity ratio.
    double b2 = std::min(std::max(alpha2, f2max / f1), cap2);
    double b3 = std::min(std::max(alpha3, f3max / f1), cap3);
    return {b2, b3};
}

MergeShares merge_allocation(double f1max, double f2max, double f3max, double q) {
    if (!(f1max >= 0.0 && f2max >= 0.0 && f3max > 0.0))
        throw ConfigError("merge_allocation: capacities must be nonnegative, f3max positive");
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("merge_allocation: q out of [0,1]");
    MergeShares s;
    if (f1max + f2max <= f3max) {
        s.f1 = f1max;
        s.f2 = f2max;
        s.q_effective = f1max + f2max > 0.0 ? f1max / (f1max + f2max) : q;
        return s;
    }
    double p1 = q * f3max, p2 = (1.0 - q) * f3max;
    if (p1 <= f1max && p2 <= f2max) {
        s.f1 = p1;
        s.f2 = p2;
        s.q_effective = q;
        return s;
    }
    if (p1 > f1max) {
        s.f1 = f1max;
        s.f2 = f3max - f1max;
    } else {
        s.f2 = f2max;
        s.f1 = f3max - f2max;
    }
    s.q_effective = s.f1 / f3max;
    return s;
}

// ---------------------------------------------------------------------------
// AnalyticSolution

struct AnalyticSolution::Impl {
    enum class Kind { OneToOne, Diverge, Merge } kind = Kind::OneToOne;

    struct InArc {
        ArcId id;
        double a = 0.0, rho_max = 0.0;
        double J = 0.0;  ///< junction coordinate (arc's hi end)
        double lo = 0.0; ///< upstream end
        Profile rho0;
        std::optional<InterfaceG> iface;
    };
    struct OutArc {
        ArcId id;
        double a = 0.0, rho_max = 0.0;
        double lo = 0.0; ///< junction coordinate (arc's lo end)
        Profile rho0;
    };

    std::vector<InArc> in;
    std::vector<OutArc> out;
    double horizon = 0.0;

    bool active = false; // diverge flavor
    double mu = 0.5;
    double bar2 = 0.0, bar3 = 0.0;

    std::function<double(double)> merge_total_grant;

    double evaluate(const ArcId& arc, double x, double t) const;
};

double AnalyticSolution::Impl::evaluate(const ArcId& arc, double x, double t) const {
    for (const InArc& ia : in) {
        if (ia.id != arc) continue;
        if (ia.iface && ia.iface->congested_at(t)) {
            double xi = x - ia.J;
            if (xi <= 0.0 && xi > ia.iface->g(t)) return ia.rho_max;
        }
        return ia.rho0(x - ia.a * t);
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        const OutArc& oa = out[k];
        if (oa.id != arc) continue;
        double xi = x - oa.lo;
        if (xi > oa.a * t) return oa.rho0(x - oa.a * t);
        double tau = t - xi / oa.a; // departure time from the junction
        switch (kind) {
            case Kind::OneToOne: {
                const InArc& ia = in[0];
                if (ia.iface->congested_at(tau)) return oa.rho_max;
                return ia.a / oa.a * ia.rho0(ia.J - ia.a * tau);
            }
            case Kind::Diverge: {
                const InArc& ia = in[0];
                if (ia.iface->congested_at(tau))
                    return active ? oa.rho_max : (k == 0 ? bar2 : bar3);
                double trace = ia.rho0(ia.J - ia.a * tau);
                double split;
                if (active) {
                    auto [b2, b3] = beta_active(trace, mu, ia.a, out[0].a, out[1].a,
                                                out[0].rho_max, out[1].rho_max);
                    split = k == 0 ? b2 : b3;
                } else {
                    split = k == 0 ? mu : 1.0 - mu;
                }
                return split * ia.a / oa.a * trace;
            }
            case Kind::Merge:
                return merge_total_grant(tau) / oa.a;
        }
    }
    throw ConfigError("analytic evaluate: unknown arc '" + arc + "'");
}

namespace {

/// Congestion episodes of a junction fed by a single arc whose granted
/// outflow is a constant rate (equal to the congestion threshold flux).
std::vector<CongestionWindow> single_in_windows(const Profile& rho0, double a, double J,
                                                double rate, double horizon) {
    std::vector<CongestionWindow> ws;
    double t_search = 0.0;
    while (t_search < horizon) {
        auto onset = first_congestion_time(rho0, a, J, rate, t_search, horizon);
        if (!onset) break;
        CongestionWindow w;
        w.t_start = *onset;
        auto cleared = [&rho0, a, J, rate, &w](double t) {
            return rate * (t - w.t_start) - rho0.integral(J - a * t, J - a * w.t_start);
        };
        auto offset = first_sign_change(cleared, w.t_start + kCongestionScanStep, horizon);
        if (offset) w.t_end = *offset;
        ws.push_back(w);
        if (!offset) break;
        t_search = w.t_end;
    }
    return ws;
}

std::function<double(double)> constant_rate_grant(std::vector<CongestionWindow> windows,
                                                  double rate) {
    return [windows = std::move(windows), rate](double t) {
        const CongestionWindow* w = find_window(windows, t);
        return w ? rate * (t - w->t_start) : 0.0;
    };
}

// -- merge timeline ---------------------------------------------------------

/// Piecewise description of the two incoming arcs' granted fluxes. Within a
/// segment each grant is either constant, the arc's own arriving flux, or
/// the outgoing capacity minus the partner's arriving flux.
struct MergeTimeline {
    struct ArcIn {
        double a = 0.0, rho_max = 0.0, J = 0.0;
        Profile rho0;
        double arrival(double t) const { return a * rho0(J - a * t); }
        double arrived(double ta, double tb) const {
            return rho0.integral(J - a * tb, J - a * ta);
        }
    };
    enum class Form { Const, OwnArrival, ComplementOther };
    struct Seg {
        double t0 = 0.0, t1 = 0.0;
        Form form[2] = {Form::OwnArrival, Form::OwnArrival};
        double c0[2] = {0.0, 0.0};
    };

    ArcIn arc[2];
    double f3max = 0.0;
    std::vector<Seg> segs;
    std::vector<CongestionWindow> windows[2];

    double grant_at(int i, const Seg& s, double t) const {
        switch (s.form[i]) {
            case Form::Const: return s.c0[i];
            case Form::OwnArrival: return arc[i].arrival(t);
            case Form::ComplementOther: return s.c0[i] - arc[1 - i].arrival(t);
        }
        return 0.0;
    }
    double grant_integral(int i, const Seg& s, double ta, double tb) const {
        switch (s.form[i]) {
            case Form::Const: return s.c0[i] * (tb - ta);
            case Form::OwnArrival: return arc[i].arrived(ta, tb);
            case Form::ComplementOther:
                return s.c0[i] * (tb - ta) - arc[1 - i].arrived(ta, tb);
        }
        return 0.0;
    }
    const Seg& seg_at(double t) const {
        for (const Seg& s : segs)
            if (t <= s.t1) return s;
        return segs.back();
    }
    double total_grant(double t) const {
        const Seg& s = seg_at(t);
        return grant_at(0, s, t) + grant_at(1, s, t);
    }
    /// Cumulative grant to arc i within the window containing t.
    double granted(int i, double t) const {
        const CongestionWindow* w = find_window(windows[i], t);
        if (!w) return 0.0;
        double acc = 0.0;
        for (const Seg& s : segs) {
            double lo = std::max(s.t0, w->t_start), hi = std::min(s.t1, t);
            if (hi > lo) acc += grant_integral(i, s, lo, hi);
        }
        return acc;
    }
};

/// Event-driven queue balance at a merge. Grants always follow
/// merge_allocation applied to the current demands (capacity flux while an
/// arc is backlogged, its arriving flux otherwise), so the total granted
/// flux equals min(f3max, total demand) and flux conservation holds in
/// every regime, including after one arc has drained.
MergeTimeline build_merge_timeline(MergeTimeline::ArcIn a0, MergeTimeline::ArcIn a1,
                                   double f1max, double f2max, double f3max, double q,
                                   double horizon) {
    MergeTimeline tl;
    tl.arc[0] = std::move(a0);
    tl.arc[1] = std::move(a1);
    tl.f3max = f3max;
    const double fmax[2] = {f1max, f2max};

    bool cong[2] = {false, false};
    double backlog[2] = {0.0, 0.0};
    double t = 0.0;

    auto grants_of = [&](bool c0, bool c1, double s, double out[2]) {
        double d0 = c0 ? fmax[0] : tl.arc[0].arrival(s);
        double d1 = c1 ? fmax[1] : tl.arc[1].arrival(s);
        MergeShares sh = merge_allocation(d0, d1, f3max, q);
        out[0] = sh.f1;
        out[1] = sh.f2;
    };
    // Discrete regime signature: allocation branch plus starvation bits of
    // the free arcs. A segment spans a maximal interval of constant signature.
    auto signature = [&](double s) {
        double d0 = cong[0] ? fmax[0] : tl.arc[0].arrival(s);
        double d1 = cong[1] ? fmax[1] : tl.arc[1].arrival(s);
        int branch;
        if (d0 + d1 <= f3max) {
            branch = 0;
        } else {
            double p0 = q * f3max, p1 = (1.0 - q) * f3max;
            branch = (p0 <= d0 && p1 <= d1) ? 1 : (p0 > d0 ? 2 : 3);
        }
        double g[2];
        grants_of(cong[0], cong[1], s, g);
        int starve0 = !cong[0] && tl.arc[0].arrival(s) > g[0] * (1.0 + 1e-13) ? 1 : 0;
        int starve1 = !cong[1] && tl.arc[1].arrival(s) > g[1] * (1.0 + 1e-13) ? 1 : 0;
        return branch | starve0 << 2 | starve1 << 3;
    };

    // Flags arcs whose arrival exceeds their grant at t+ (fixpoint: flagging
    // one arc changes the demands, which may change the other's grant).
    auto flag_fixpoint = [&](double at) {
        for (int pass = 0; pass < 3; ++pass) {
            double s = std::min(at + 1e-9, horizon);
            double g[2];
            grants_of(cong[0], cong[1], s, g);
            bool changed = false;
            for (int i = 0; i < 2; ++i) {
                if (!cong[i] && tl.arc[i].arrival(s) > g[i] * (1.0 + 1e-13)) {
                    cong[i] = true;
                    backlog[i] = 0.0;
                    tl.windows[i].push_back({at, kInf});
                    changed = true;
                }
            }
            if (!changed) break;
        }
    };

    int guard = 0;
    while (t < horizon - 1e-13) {
        if (++guard > 100000)
            throw NumericError("merge timeline: regime iteration limit exceeded");

        flag_fixpoint(t);
        double probe = std::min(t + 1e-9, horizon);
        int sig0 = signature(probe);

        MergeTimeline::Seg seg;
        seg.t0 = t;
        {
            double d0 = cong[0] ? fmax[0] : tl.arc[0].arrival(probe);
            double d1 = cong[1] ? fmax[1] : tl.arc[1].arrival(probe);
            int branch = sig0 & 3;
            auto form_free = MergeTimeline::Form::OwnArrival;
            switch (branch) {
                case 0:
                    for (int i = 0; i < 2; ++i) {
                        if (cong[i]) {
                            seg.form[i] = MergeTimeline::Form::Const;
                            seg.c0[i] = fmax[i];
                        } else {
                            seg.form[i] = form_free;
                        }
                    }
                    break;
                case 1: {
                    double p0 = q * f3max, p1 = (1.0 - q) * f3max;
                    seg.form[0] = seg.form[1] = MergeTimeline::Form::Const;
                    seg.c0[0] = p0;
                    seg.c0[1] = p1;
                    break;
                }
                case 2:
                case 3: {
                    int b = branch == 2 ? 0 : 1; // starved side sends its demand
                    int o = 1 - b;
                    if (cong[b]) {
                        seg.form[b] = MergeTimeline::Form::Const;
                        seg.c0[b] = fmax[b];
                        seg.form[o] = MergeTimeline::Form::Const;
                        seg.c0[o] = f3max - fmax[b];
                    } else {
                        seg.form[b] = form_free;
                        seg.form[o] = MergeTimeline::Form::ComplementOther;
                        seg.c0[o] = f3max;
                    }
                    break;
                }
            }
            (void)d0;
            (void)d1;
        }

        // Earliest event: signature change or a backlog emptying.
        double t_event = horizon;
        int emptied = -1;
        auto sig_change = first_sign_change(
            [&](double s) { return signature(s) != sig0 ? 1.0 : -1.0; }, probe, horizon);
        if (sig_change) t_event = std::min(t_event, *sig_change);
        for (int i = 0; i < 2; ++i) {
            if (!cong[i]) continue;
            auto cleared = first_sign_change(
                [&, i](double s) {
                    return -(backlog[i] + tl.arc[i].arrived(t, s) - tl.grant_integral(i, seg, t, s));
                },
                probe, t_event);
            if (cleared && *cleared <= t_event) {
                t_event = *cleared;
                emptied = i;
            }
        }

        seg.t1 = t_event;
        tl.segs.push_back(seg);
        for (int i = 0; i < 2; ++i) {
            if (!cong[i]) continue;
            backlog[i] += tl.arc[i].arrived(t, t_event) - tl.grant_integral(i, seg, t, t_event);
            if (backlog[i] < 0.0) backlog[i] = 0.0;
        }
        t = t_event;
        if (t >= horizon - 1e-13) break;

        if (emptied >= 0) {
            cong[emptied] = false;
            backlog[emptied] = 0.0;
            tl.windows[emptied].back().t_end = t;
        }
    }
    if (tl.segs.empty()) {
        MergeTimeline::Seg seg;
        seg.t0 = 0.0;
        seg.t1 = horizon;
        tl.segs.push_back(seg);
    }
    return tl;
}

Profile profile_for(const Scenario& sc, const ArcId& id) {
    auto it = sc.initial.find(id);
    return it != sc.initial.end() ? it->second : Profile::zero();
}

} // namespace

AnalyticSolution::AnalyticSolution(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)), horizon_(impl_->horizon) {}

double AnalyticSolution::evaluate(const ArcId& arc, double x, double t) const {
    return impl_->evaluate(arc, x, t);
}

const InterfaceG& AnalyticSolution::interface(const ArcId& arc) const {
    for (const Impl::InArc& ia : impl_->in)
        if (ia.id == arc && ia.iface) return *ia.iface;
    throw ConfigError("no interface tracked on arc '" + arc + "'");
}

std::optional<double> AnalyticSolution::first_congestion() const {
    std::optional<double> t0;
    for (const Impl::InArc& ia : impl_->in)
        for (const CongestionWindow& w : ia.iface->windows())
            if (!t0 || w.t_start < *t0) t0 = w.t_start;
    return t0;
}

std::optional<double> AnalyticSolution::first_congestion_end() const {
    auto t0 = first_congestion();
    if (!t0) return std::nullopt;
    // The episode ends once no incoming arc is congested anymore.
    double t = *t0;
    for (int pass = 0; pass < 16; ++pass) {
        double next = kInf;
        bool inside = false;
        for (const Impl::InArc& ia : impl_->in) {
            for (const CongestionWindow& w : ia.iface->windows()) {
                if (w.contains(t) || w.t_start == t) {
                    inside = true;
                    next = std::min(next, w.t_end);
                }
            }
        }
        if (!inside) return t;
        if (!std::isfinite(next)) return std::nullopt; // still congested at horizon
        bool still = false;
        for (const Impl::InArc& ia : impl_->in)
            if (ia.iface->congested_at(next + 1e-12)) still = true;
        if (!still) return next;
        t = next + 1e-12;
    }
    return t;
}

AnalyticSolution build_analytic(const Scenario& sc) {
    ValidationReport report = validate(sc.network);
    if (!report.ok())
        throw ConfigError("no analytic oracle: network invalid: " +
                          report.violations.front().message);
    for (const auto& [idx, fn] : sc.source_inflow)
        if (fn) throw ConfigError("no analytic oracle for scenarios with external source inflow");

    const JunctionSpec* interior = nullptr;
    for (const JunctionSpec& j : sc.network.junctions) {
        if (j.kind == JunctionKind::Source || j.kind == JunctionKind::Sink) continue;
        if (interior)
            throw ConfigError("no analytic oracle: network has more than one interior junction");
        interior = &j;
    }
    if (!interior) throw ConfigError("no analytic oracle: network has no interior junction");

    auto impl = std::make_shared<AnalyticSolution::Impl>();
    impl->horizon = sc.horizon;

    auto make_in = [&](const ArcId& id) {
        const BeltArc& arc = sc.network.arcs.at(id);
        AnalyticSolution::Impl::InArc ia;
        ia.id = id;
        ia.a = arc.velocity;
        ia.rho_max = arc.capacity;
        ia.J = arc.hi;
        ia.lo = arc.lo;
        ia.rho0 = profile_for(sc, id);
        if (ia.rho0.max_value() > arc.capacity * (1.0 + 1e-12))
            throw ConfigError("initial profile on arc '" + id + "' exceeds its capacity");
        return ia;
    };
    auto make_out = [&](const ArcId& id) {
        const BeltArc& arc = sc.network.arcs.at(id);
        AnalyticSolution::Impl::OutArc oa;
        oa.id = id;
        oa.a = arc.velocity;
        oa.rho_max = arc.capacity;
        oa.lo = arc.lo;
        oa.rho0 = profile_for(sc, id);
        return oa;
    };
    for (const ArcId& id : interior->in_arcs) impl->in.push_back(make_in(id));
    for (const ArcId& id : interior->out_arcs) impl->out.push_back(make_out(id));

    using Kind = AnalyticSolution::Impl::Kind;
    switch (interior->kind) {
        case JunctionKind::OneToOne: {
            impl->kind = Kind::OneToOne;
            auto& ia = impl->in[0];
            double rate = impl->out[0].a * impl->out[0].rho_max;
            auto windows = single_in_windows(ia.rho0, ia.a, ia.J, rate, sc.horizon);
            ia.iface.emplace(ia.rho0, ia.a, ia.rho_max, ia.J, ia.lo, windows,
                             constant_rate_grant(windows, rate));
            break;
        }
        case JunctionKind::DivergePassive:
        case JunctionKind::DivergeActive: {
            impl->kind = Kind::Diverge;
            impl->active = interior->kind == JunctionKind::DivergeActive;
            impl->mu = interior->mu.value();
            auto& ia = impl->in[0];
            double a2 = impl->out[0].a, a3 = impl->out[1].a;
            double rm2 = impl->out[0].rho_max, rm3 = impl->out[1].rho_max;
            double mu = impl->mu;
            impl->bar2 = mu >= 1.0 ? rm2 : std::min(mu / (1.0 - mu) * (a3 / a2) * rm3, rm2);
            impl->bar3 = mu <= 0.0 ? rm3 : std::min((1.0 - mu) / mu * (a2 / a3) * rm2, rm3);
            double rate = impl->active ? a2 * rm2 + a3 * rm3
                                       : impl->bar2 * a2 + impl->bar3 * a3;
            auto windows = single_in_windows(ia.rho0, ia.a, ia.J, rate, sc.horizon);
            ia.iface.emplace(ia.rho0, ia.a, ia.rho_max, ia.J, ia.lo, windows,
                             constant_rate_grant(windows, rate));
            break;
        }
        case JunctionKind::Merge: {
            impl->kind = Kind::Merge;
            double q = interior->q.value();
            double f3max = impl->out[0].a * impl->out[0].rho_max;
            MergeTimeline::ArcIn a0{impl->in[0].a, impl->in[0].rho_max, impl->in[0].J,
                                    impl->in[0].rho0};
            MergeTimeline::ArcIn a1{impl->in[1].a, impl->in[1].rho_max, impl->in[1].J,
                                    impl->in[1].rho0};
            auto tl = std::make_shared<MergeTimeline>(build_merge_timeline(
                std::move(a0), std::move(a1),
                impl->in[0].a * impl->in[0].rho_max,
                impl->in[1].a * impl->in[1].rho_max, f3max, q, sc.horizon));
            for (int i = 0; i < 2; ++i) {
                auto& ia = impl->in[i];
                ia.iface.emplace(ia.rho0, ia.a, ia.rho_max, ia.J, ia.lo, tl->windows[i],
                                 [tl, i](double t) { return tl->granted(i, t); });
            }
            impl->merge_total_grant = [tl](double t) { return tl->total_grant(t); };
            break;
        }
        default:
            throw ConfigError("no analytic oracle for this junction kind");
    }

    return AnalyticSolution(impl);
}

} // namespace beltflow
