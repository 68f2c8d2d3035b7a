#include "beltflow/network.hpp"

#include "beltflow/errors.hpp"

#include <map>
#include <numbers>
#include <sstream>

namespace beltflow {

const char* to_string(JunctionKind kind) {
    switch (kind) {
        case JunctionKind::Source: return "source";
        case JunctionKind::Sink: return "sink";
        case JunctionKind::OneToOne: return "one_to_one";
        case JunctionKind::DivergePassive: return "diverge_passive";
        case JunctionKind::DivergeActive: return "diverge_active";
        case JunctionKind::Merge: return "merge";
    }
    return "?";
}

namespace {

struct Arity {
    std::size_t in, out;
};

Arity expected_arity(JunctionKind kind) {
    switch (kind) {
        case JunctionKind::Source: return {0, 1};
        case JunctionKind::Sink: return {1, 0};
        case JunctionKind::OneToOne: return {1, 1};
        case JunctionKind::DivergePassive:
        case JunctionKind::DivergeActive: return {1, 2};
        case JunctionKind::Merge: return {2, 1};
    }
    return {0, 0};
}

std::string junction_locus(std::size_t idx, JunctionKind kind) {
    std::ostringstream os;
    os << "junction #" << idx << " (" << to_string(kind) << ")";
    return os.str();
}

} // namespace

ValidationReport validate(const Network& network) {
    ValidationReport report;
    auto violation = [&](const std::string& locus, const std::string& msg) {
        report.violations.push_back({locus, msg});
    };

    for (const auto& [id, arc] : network.arcs) {
        std::string locus = "arc '" + id + "'";
        if (arc.id != id) violation(locus, "arc id does not match its map key");
        if (!(arc.velocity > 0.0)) violation(locus, "velocity must be positive");
        if (!(arc.capacity > 0.0)) violation(locus, "capacity must be positive");
        if (!(arc.lo < arc.hi)) violation(locus, "interval must satisfy lo < hi");
    }

    // lo-side / hi-side attachment counts per arc
    std::map<ArcId, int> lo_attached, hi_attached;

    for (std::size_t k = 0; k < network.junctions.size(); ++k) {
        const JunctionSpec& j = network.junctions[k];
        std::string locus = junction_locus(k, j.kind);
        Arity want = expected_arity(j.kind);
        if (j.in_arcs.size() != want.in) {
            std::ostringstream os;
            os << "expects " << want.in << " incoming arc(s), has " << j.in_arcs.size();
            violation(locus, os.str());
        }
        if (j.out_arcs.size() != want.out) {
            std::ostringstream os;
            os << "expects " << want.out << " outgoing arc(s), has " << j.out_arcs.size();
            violation(locus, os.str());
        }

        bool is_diverge = j.kind == JunctionKind::DivergePassive || j.kind == JunctionKind::DivergeActive;
        if (is_diverge) {
            if (!j.mu) {
                violation(locus, "mu missing");
            } else if (!(*j.mu >= 0.0 && *j.mu <= 1.0)) {
                violation(locus, "mu out of [0,1]");
            } else if (j.kind == JunctionKind::DivergePassive && (*j.mu == 0.0 || *j.mu == 1.0)) {
                report.notes.push_back({locus, "mu in {0,1} reduces this junction to one-to-one"});
            }
        } else if (j.mu) {
            violation(locus, "mu only applies to diverge junctions");
        }
        if (j.kind == JunctionKind::Merge) {
            if (!j.q) {
                violation(locus, "q missing");
            } else if (!(*j.q >= 0.0 && *j.q <= 1.0)) {
                violation(locus, "q out of [0,1]");
            }
        } else if (j.q) {
            violation(locus, "q only applies to merge junctions");
        }

        for (const ArcId& id : j.in_arcs) {
            if (!network.arcs.count(id)) {
                violation(locus, "unresolved arc id '" + id + "'");
            } else {
                ++hi_attached[id];
            }
        }
        for (const ArcId& id : j.out_arcs) {
            if (!network.arcs.count(id)) {
                violation(locus, "unresolved arc id '" + id + "'");
            } else {
                ++lo_attached[id];
            }
        }
    }

    for (const auto& [id, arc] : network.arcs) {
        std::string locus = "arc '" + id + "'";
        int lo = lo_attached.count(id) ? lo_attached[id] : 0;
        int hi = hi_attached.count(id) ? hi_attached[id] : 0;
        if (lo != 1) {
            std::ostringstream os;
            os << "upstream end attached to " << lo << " junction(s), expected exactly 1";
            violation(locus, os.str());
        }
        if (hi != 1) {
            std::ostringstream os;
            os << "downstream end attached to " << hi << " junction(s), expected exactly 1";
            violation(locus, os.str());
        }
    }

    return report;
}

Network standard_topology(TopologyKind kind, const TopologyParams& params) {
    const double pi = std::numbers::pi;
    std::size_t n_arcs = kind == TopologyKind::OneToOne ? 2 : 3;
    if (params.velocity.size() != n_arcs || params.capacity.size() != n_arcs) {
        std::ostringstream os;
        os << "standard_topology: expected " << n_arcs << " velocities and capacities, got "
           << params.velocity.size() << " and " << params.capacity.size();
        throw ConfigError(os.str());
    }

    Network net;
    auto add_arc = [&](const char* id, double lo, double hi, std::size_t k) {
        net.arcs[id] = BeltArc{id, lo, hi, params.velocity[k], params.capacity[k]};
    };
    auto source = [&](const char* out) {
        net.junctions.push_back({JunctionKind::Source, {}, {out}, {}, {}});
    };
    auto sink = [&](const char* in) {
        net.junctions.push_back({JunctionKind::Sink, {in}, {}, {}, {}});
    };

    switch (kind) {
        case TopologyKind::OneToOne:
            add_arc("1", -pi, 0.0, 0);
            add_arc("2", 0.0, pi, 1);
            source("1");
            net.junctions.push_back({JunctionKind::OneToOne, {"1"}, {"2"}, {}, {}});
            sink("2");
            break;
        case TopologyKind::OneToTwo: {
            if (!params.mu) throw ConfigError("standard_topology: one_to_two requires mu");
            add_arc("1", -pi, 0.0, 0);
            add_arc("2", 0.0, pi, 1);
            add_arc("3", 0.0, pi, 2);
            source("1");
            JunctionKind k = params.active_diverge ? JunctionKind::DivergeActive
                                                   : JunctionKind::DivergePassive;
            net.junctions.push_back({k, {"1"}, {"2", "3"}, params.mu, {}});
            sink("2");
            sink("3");
            break;
        }
        case TopologyKind::TwoToOne: {
            if (!params.q) throw ConfigError("standard_topology: two_to_one requires q");
            add_arc("1", -pi, 0.0, 0);
            add_arc("2", -pi, 0.0, 1);
            add_arc("3", 0.0, pi, 2);
            source("1");
            source("2");
            net.junctions.push_back({JunctionKind::Merge, {"1", "2"}, {"3"}, {}, params.q});
            sink("3");
            break;
        }
    }
    return net;
}

} // namespace beltflow
