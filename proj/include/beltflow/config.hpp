#pragma once

#include "beltflow/network.hpp"
#include "beltflow/scenario.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beltflow {

/// Refinement or smoothing study request parsed from a config file.
struct StudySpec {
    enum class Kind { Refinement, Smoothing } kind = Kind::Refinement;
    std::vector<std::pair<double, double>> rows; ///< (dx, dt) pairs, refinement
    std::vector<double> deltas;                  ///< smoothing widths
    double dx = 5e-3, dt = 2e-6;                 ///< smoothing study grid
};

struct ParsedConfig {
    Scenario scenario;
    std::optional<StudySpec> study;
};

/// Parses a JSON scenario description. Either {"scenario": "<builtin>"} or
/// explicit sections arcs[], junctions[], initial[]; plus optional
/// numerics{} overrides and a study{} block. Reports parse errors with
/// line/column, forwards network validation failures, and rejects a dt above
/// the CFL bound (naming the largest admissible step).
ParsedConfig parse_config(const std::string& text);

/// Canonical JSON for a network alone.
std::string render_network(const Network& network);

/// Inverse of render_network: parse_network(render_network(n)) is
/// structurally equal to n.
Network parse_network(const std::string& text);

} // namespace beltflow
