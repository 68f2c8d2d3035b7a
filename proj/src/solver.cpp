#include "beltflow/solver.hpp"

#include "beltflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace beltflow {

Simulator::Simulator(const Scenario& scenario, const NetworkState* initial) {
    ValidationReport report = validate(scenario.network);
    if (!report.ok()) {
        const ValidationIssue& v = report.violations.front();
        std::ostringstream os;
        os << "invalid network: " << v.locus << ": " << v.message;
        if (report.violations.size() > 1)
            os << " (+" << report.violations.size() - 1 << " more)";
        throw ConfigError(os.str());
    }

    grids_ = build_grids(scenario.network, scenario.dx);
    dt_ = scenario.dt;
    double dx = grids_.begin()->second.dx;
    double dt_max = cfl_max_timestep(scenario.network, scenario.delta, dx);
    if (!(dt_ > 0.0)) throw ConfigError("dt must be positive");
    if (dt_ > dt_max * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "dt=" << dt_ << " violates the CFL bound; largest admissible dt=" << dt_max;
        throw CflError(os.str(), dt_max);
    }

    for (const auto& [id, arc] : scenario.network.arcs) {
        ArcRt rt{id, FluxParams(arc.velocity, arc.capacity, scenario.delta),
                 grids_.at(id), {}, {}, 0.0, 0.0};
        rt.rho.resize(rt.grid.n_cells, 0.0);
        rt.rho_next.resize(rt.grid.n_cells, 0.0);
        auto pit = scenario.initial.find(id);
        if (pit != scenario.initial.end()) {
            const Profile& p = pit->second;
            if (p.max_value() > arc.capacity * (1.0 + 1e-12)) {
                std::ostringstream os;
                os << "initial profile on arc '" << id << "' exceeds its capacity ("
                   << p.max_value() << " > " << arc.capacity << ")";
                throw ConfigError(os.str());
            }
            for (int j = 0; j < rt.grid.n_cells; ++j) rt.rho[j] = p(rt.grid.center(j));
        }
        arcs_.push_back(std::move(rt));
    }

    std::map<ArcId, int> index;
    for (std::size_t i = 0; i < arcs_.size(); ++i) index[arcs_[i].id] = static_cast<int>(i);

    for (std::size_t k = 0; k < scenario.network.junctions.size(); ++k) {
        const JunctionSpec& spec = scenario.network.junctions[k];
        JunctionRt rt;
        rt.kind = spec.kind;
        for (const ArcId& id : spec.in_arcs) rt.in.push_back(index.at(id));
        for (const ArcId& id : spec.out_arcs) rt.out.push_back(index.at(id));
        rt.mu = spec.mu.value_or(0.0);
        rt.q = spec.q.value_or(0.0);
        if (spec.kind == JunctionKind::Source) {
            auto it = scenario.source_inflow.find(static_cast<int>(k));
            if (it != scenario.source_inflow.end()) rt.inflow = it->second;
        }
        junctions_.push_back(std::move(rt));
    }

    if (initial) {
        time0_ = time_ = initial->time;
        for (ArcRt& a : arcs_) {
            auto it = initial->fields.find(a.id);
            if (it == initial->fields.end() || static_cast<int>(it->second.size()) != a.grid.n_cells)
                throw ConfigError("initial state does not match the grid of arc '" + a.id + "'");
            a.rho = it->second;
        }
    }
}

void Simulator::apply_junction_fluxes() {
    for (const JunctionRt& j : junctions_) {
        switch (j.kind) {
            case JunctionKind::Source: {
                ArcRt& out = arcs_[j.out[0]];
                out.h_in = j.inflow ? j.inflow(time_) : 0.0;
                inflow_integral_ += out.h_in * dt_;
                break;
            }
            case JunctionKind::Sink: {
                ArcRt& in = arcs_[j.in[0]];
                in.h_out = demand(in.flux, in.rho.back());
                outflow_integral_ += in.h_out * dt_;
                break;
            }
            case JunctionKind::OneToOne: {
                ArcRt& in = arcs_[j.in[0]];
                ArcRt& out = arcs_[j.out[0]];
                JunctionFluxes f = junction_fluxes_one_to_one(in.rho.back(), out.rho.front(),
                                                              in.flux, out.flux);
                in.h_out = f.outflow[0];
                out.h_in = f.inflow[0];
                break;
            }
            case JunctionKind::DivergePassive:
            case JunctionKind::DivergeActive: {
                ArcRt& in = arcs_[j.in[0]];
                ArcRt& o2 = arcs_[j.out[0]];
                ArcRt& o3 = arcs_[j.out[1]];
                JunctionFluxes f = junction_fluxes_diverge(
                    in.rho.back(), o2.rho.front(), o3.rho.front(),
                    in.flux, o2.flux, o3.flux, j.mu,
                    j.kind == JunctionKind::DivergeActive);
                in.h_out = f.outflow[0];
                o2.h_in = f.inflow[0];
                o3.h_in = f.inflow[1];
                break;
            }
            case JunctionKind::Merge: {
                ArcRt& i1 = arcs_[j.in[0]];
                ArcRt& i2 = arcs_[j.in[1]];
                ArcRt& out = arcs_[j.out[0]];
                JunctionFluxes f = junction_fluxes_merge(
                    i1.rho.back(), i2.rho.back(), out.rho.front(),
                    i1.flux, i2.flux, out.flux, j.q);
                i1.h_out = f.outflow[0];
                i2.h_out = f.outflow[1];
                out.h_in = f.inflow[0];
                break;
            }
        }
    }
}

void Simulator::advance_arcs() {
    for (ArcRt& a : arcs_) {
        const double lam = dt_ / a.grid.dx;
        const int n = a.grid.n_cells;
        const double* rho = a.rho.data();
        double* next = a.rho_next.data();
        double prev = a.h_in;
        double checksum = 0.0;
        for (int j = 0; j < n; ++j) {
            double right = j + 1 < n ? godunov_flux(a.flux, rho[j], rho[j + 1]) : a.h_out;
            double v = rho[j] - lam * (right - prev);
            next[j] = v;
            checksum += v;
            prev = right;
        }
        if (!std::isfinite(checksum)) {
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(next[j])) {
                    std::ostringstream os;
                    os << "non-finite density on arc '" << a.id << "', cell " << j
                       << " (x=" << a.grid.center(j) << ") at t=" << time_ + dt_;
                    throw NumericError(os.str());
                }
            }
        }
        a.rho.swap(a.rho_next);
    }
}

void Simulator::step() {
    apply_junction_fluxes();
    advance_arcs();
    ++step_count_;
    time_ = time0_ + step_count_ * dt_;
}

NetworkState Simulator::snapshot() const {
    NetworkState s;
    s.time = time_;
    for (const ArcRt& a : arcs_) s.fields[a.id] = a.rho;
    return s;
}

NetworkState step(const NetworkState& state, const Scenario& scenario, double dt) {
    Scenario s = scenario;
    s.dt = dt;
    Simulator sim(s, &state);
    sim.step();
    return sim.snapshot();
}

void run_simulation(const Scenario& scenario,
                    const std::function<void(const Frame&)>& sink) {
    Simulator sim(scenario);
    if (!(scenario.horizon >= 0.0)) throw ConfigError("scenario horizon must be nonnegative");

    const double dt = sim.dt();
    const long n_total = std::llround(scenario.horizon / dt);
    std::vector<long> marks;
    for (double t : scenario.output_times) {
        if (t < -1e-12 || t > scenario.horizon * (1.0 + 1e-9) + 1e-12) {
            std::ostringstream os;
            os << "output time " << t << " outside [0, " << scenario.horizon << "]";
            throw ConfigError(os.str());
        }
        long k = std::llround(t / dt);
        if (k > 0) marks.push_back(std::min(k, n_total));
    }
    std::sort(marks.begin(), marks.end());

    auto emit = [&]() {
        Frame fr;
        fr.time = sim.time();
        fr.state = sim.snapshot();
        fr.inflow_integral = sim.inflow_integral();
        fr.outflow_integral = sim.outflow_integral();
        sink(fr);
    };

    emit(); // t = 0
    long done = 0;
    for (long mark : marks) {
        while (done < mark) {
            sim.step();
            ++done;
        }
        emit();
    }
}

Trajectory run_simulation(const Scenario& scenario) {
    Trajectory traj;
    traj.grids = build_grids(scenario.network, scenario.dx);
    run_simulation(scenario, [&](const Frame& fr) { traj.frames.push_back(fr); });
    return traj;
}

} // namespace beltflow
