#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace beltflow {

using ArcId = std::string;

/// One conveyor segment: a 1D interval travelled at constant speed with a
/// hard density cap.
struct BeltArc {
    ArcId id;
    double lo = 0.0, hi = 0.0; ///< spatial interval (lo, hi), meters
    double velocity = 0.0;     ///< belt speed, m/s, > 0
    double capacity = 0.0;     ///< maximal density, units/m, > 0

    double length() const { return hi - lo; }

    friend bool operator==(const BeltArc&, const BeltArc&) = default;
};

enum class JunctionKind {
    Source,         ///< no incoming arcs; optional external inflow
    Sink,           ///< no outgoing arcs; absorbs everything arriving
    OneToOne,       ///< 1 in, 1 out
    DivergePassive, ///< 1 in, 2 out; fixed split ratio mu : 1-mu
    DivergeActive,  ///< 1 in, 2 out; split adapts to maximize throughput
    Merge           ///< 2 in, 1 out; priority share q : 1-q under congestion
};

const char* to_string(JunctionKind kind);

struct JunctionSpec {
    JunctionKind kind = JunctionKind::OneToOne;
    std::vector<ArcId> in_arcs;
    std::vector<ArcId> out_arcs;
    std::optional<double> mu; ///< diverge kinds only, in [0,1]
    std::optional<double> q;  ///< merge only, in [0,1]

    friend bool operator==(const JunctionSpec&, const JunctionSpec&) = default;
};

/// Directed belt network. Immutable after construction by convention;
/// all solver/analytic entry points take it by const reference.
struct Network {
    std::map<ArcId, BeltArc> arcs;
    std::vector<JunctionSpec> junctions;

    friend bool operator==(const Network&, const Network&) = default;
};

struct ValidationIssue {
    std::string locus;   ///< e.g. "arc '2'" or "junction #1 (merge)"
    std::string message;
};

/// Violations are structural defects; notes are legal-but-noteworthy
/// configurations (e.g. a passive diverge with mu in {0,1}, which reduces
/// to a one-to-one junction).
struct ValidationReport {
    std::vector<ValidationIssue> violations;
    std::vector<ValidationIssue> notes;

    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant: positive speeds/capacities, interval
/// orientation, junction arities, mu/q presence and bounds, resolvable arc
/// references, exactly one junction attached to each arc end, in-degree <= 2.
ValidationReport validate(const Network& network);

enum class TopologyKind { OneToOne, OneToTwo, TwoToOne };

struct TopologyParams {
    std::vector<double> velocity;
    std::vector<double> capacity;
    std::optional<double> mu;     ///< OneToTwo only
    std::optional<double> q;      ///< TwoToOne only
    bool active_diverge = false;  ///< OneToTwo: passive (default) or active
};

/// Canonical single-junction layouts on pi-length arcs: incoming arcs on
/// (-pi, 0), outgoing on (0, pi), junction at x = 0, with a source feeding
/// every incoming arc and a sink downstream of every outgoing one.
/// Arc ids are "1", "2" (, "3") with "1" (and "2" for TwoToOne) incoming.
Network standard_topology(TopologyKind kind, const TopologyParams& params);

} // namespace beltflow
