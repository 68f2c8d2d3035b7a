#include "beltflow/config.hpp"

#include "beltflow/errors.hpp"
#include "beltflow/flux.hpp"
#include "beltflow/io.hpp"

#include <json.hpp>

#include <sstream>

namespace beltflow {

using nlohmann::json;

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

JunctionKind kind_from_string(const std::string& s) {
    if (s == "source") return JunctionKind::Source;
    if (s == "sink") return JunctionKind::Sink;
    if (s == "one_to_one") return JunctionKind::OneToOne;
    if (s == "diverge_passive") return JunctionKind::DivergePassive;
    if (s == "diverge_active") return JunctionKind::DivergeActive;
    if (s == "merge") return JunctionKind::Merge;
    throw ConfigError("unknown junction kind '" + s + "'");
}

double require_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(where + ": missing numeric field '" + key + "'");
    return j[key].get<double>();
}

std::string require_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string())
        throw ConfigError(where + ": missing string field '" + key + "'");
    return j[key].get<std::string>();
}

Network network_from_json(const json& j) {
    Network net;
    if (!j.contains("arcs") || !j["arcs"].is_array())
        throw ConfigError("config: missing arcs[] section");
    if (!j.contains("junctions") || !j["junctions"].is_array())
        throw ConfigError("config: missing junctions[] section");

    for (const json& a : j["arcs"]) {
        BeltArc arc;
        arc.id = require_string(a, "id", "arcs[]");
        std::string where = "arc '" + arc.id + "'";
        arc.lo = require_number(a, "lo", where);
        arc.hi = require_number(a, "hi", where);
        arc.velocity = require_number(a, "velocity", where);
        arc.capacity = require_number(a, "capacity", where);
        if (net.arcs.count(arc.id)) throw ConfigError("duplicate arc id '" + arc.id + "'");
        net.arcs[arc.id] = arc;
    }
    for (const json& v : j["junctions"]) {
        JunctionSpec spec;
        spec.kind = kind_from_string(require_string(v, "kind", "junctions[]"));
        if (v.contains("in"))
            for (const json& id : v["in"]) spec.in_arcs.push_back(id.get<std::string>());
        if (v.contains("out"))
            for (const json& id : v["out"]) spec.out_arcs.push_back(id.get<std::string>());
        if (v.contains("mu")) spec.mu = v["mu"].get<double>();
        if (v.contains("q")) spec.q = v["q"].get<double>();
        net.junctions.push_back(std::move(spec));
    }
    return net;
}

Profile profile_from_json(const json& p, const BeltArc& arc) {
    std::string kind = require_string(p, "profile", "initial[]");
    std::string where = "initial profile on arc '" + arc.id + "'";
    if (kind == "zero") return Profile::zero();
    if (kind == "constant")
        return Profile::constant(require_number(p, "value", where), arc.lo, arc.hi);
    if (kind == "gaussian") {
        double amplitude = p.contains("amplitude") ? p["amplitude"].get<double>() : 1.0;
        double center = require_number(p, "center", where);
        double sharpness = require_number(p, "sharpness", where);
        return Profile::gaussian(amplitude, center, sharpness, arc.lo, arc.hi);
    }
    if (kind == "samples") {
        if (!p.contains("x") || !p.contains("rho"))
            throw ConfigError(where + ": samples profile needs x[] and rho[]");
        std::vector<double> xs = p["x"].get<std::vector<double>>();
        std::vector<double> ys = p["rho"].get<std::vector<double>>();
        return Profile::sampled(xs, ys);
    }
    throw ConfigError(where + ": unknown profile kind '" + kind + "'");
}

StudySpec study_from_json(const json& s) {
    StudySpec spec;
    std::string kind = require_string(s, "kind", "study");
    if (kind == "refinement") {
        spec.kind = StudySpec::Kind::Refinement;
        if (!s.contains("rows") || !s["rows"].is_array())
            throw ConfigError("study: refinement needs rows[]");
        for (const json& r : s["rows"]) {
            double dx, dt;
            if (r.is_array() && r.size() == 2) {
                dx = r[0].get<double>();
                dt = r[1].get<double>();
            } else {
                dx = require_number(r, "dx", "study row");
                dt = require_number(r, "dt", "study row");
            }
            spec.rows.emplace_back(dx, dt);
        }
    } else if (kind == "smoothing") {
        spec.kind = StudySpec::Kind::Smoothing;
        if (!s.contains("deltas") || !s["deltas"].is_array())
            throw ConfigError("study: smoothing needs deltas[]");
        spec.deltas = s["deltas"].get<std::vector<double>>();
        spec.dx = require_number(s, "dx", "study");
        spec.dt = require_number(s, "dt", "study");
    } else {
        throw ConfigError("study: unknown kind '" + kind + "'");
    }
    return spec;
}

} // namespace

ParsedConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream os;
        os << "config parse error at line " << line << ", column " << col;
        throw ConfigError(os.str());
    }

    ParsedConfig out;
    Scenario& sc = out.scenario;

    if (j.contains("scenario")) {
        sc = builtin_scenario(j["scenario"].get<std::string>());
    } else {
        sc.network = network_from_json(j);
        ValidationReport report = validate(sc.network);
        if (!report.ok()) {
            const ValidationIssue& v = report.violations.front();
            std::ostringstream os;
            os << "invalid network: " << v.locus << ": " << v.message;
            if (report.violations.size() > 1)
                os << " (+" << report.violations.size() - 1 << " more)";
            throw ConfigError(os.str());
        }
        if (j.contains("initial")) {
            for (const json& p : j["initial"]) {
                std::string arc_id = require_string(p, "arc", "initial[]");
                auto it = sc.network.arcs.find(arc_id);
                if (it == sc.network.arcs.end())
                    throw ConfigError("initial[]: unresolved arc id '" + arc_id + "'");
                Profile prof = profile_from_json(p, it->second);
                if (prof.max_value() > it->second.capacity * (1.0 + 1e-12)) {
                    std::ostringstream os;
                    os << "initial profile on arc '" << arc_id << "' exceeds its capacity ("
                       << prof.max_value() << " > " << it->second.capacity << ")";
                    throw ConfigError(os.str());
                }
                sc.initial[arc_id] = std::move(prof);
            }
        }
        sc.horizon = 0.0; // must come from numerics
    }

    bool have_dt = j.contains("scenario"); // builtins carry a dt already
    if (j.contains("numerics")) {
        const json& n = j["numerics"];
        if (n.contains("dx")) sc.dx = n["dx"].get<double>();
        if (n.contains("delta")) sc.delta = n["delta"].get<double>();
        if (n.contains("horizon")) sc.horizon = n["horizon"].get<double>();
        if (n.contains("dt")) {
            sc.dt = n["dt"].get<double>();
            have_dt = true;
        }
        if (n.contains("snapshots"))
            sc.output_times = uniform_output_times(sc.horizon, n["snapshots"].get<int>());
    }
    if (!j.contains("scenario")) {
        if (!(sc.horizon > 0.0))
            throw ConfigError("config: numerics.horizon must be set and positive");
        if (sc.output_times.empty()) sc.output_times = uniform_output_times(sc.horizon, 100);
    } else if (j.contains("numerics") && j["numerics"].contains("horizon") &&
               !j["numerics"].contains("snapshots")) {
        sc.output_times = uniform_output_times(sc.horizon, 100);
    }

    double dt_max = cfl_max_timestep(sc.network, sc.delta, sc.dx);
    if (!have_dt) sc.dt = 0.8 * dt_max;
    if (sc.dt > dt_max * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "dt=" << format_double(sc.dt)
           << " violates the CFL bound; largest admissible dt=" << format_double(dt_max);
        throw CflError(os.str(), dt_max);
    }

    if (j.contains("study")) out.study = study_from_json(j["study"]);
    return out;
}

std::string render_network(const Network& network) {
    json j;
    j["arcs"] = json::array();
    for (const auto& [id, arc] : network.arcs) {
        json a;
        a["id"] = id;
        a["lo"] = arc.lo;
        a["hi"] = arc.hi;
        a["velocity"] = arc.velocity;
        a["capacity"] = arc.capacity;
        j["arcs"].push_back(a);
    }
    j["junctions"] = json::array();
    for (const JunctionSpec& spec : network.junctions) {
        json v;
        v["kind"] = to_string(spec.kind);
        v["in"] = spec.in_arcs;
        v["out"] = spec.out_arcs;
        if (spec.mu) v["mu"] = *spec.mu;
        if (spec.q) v["q"] = *spec.q;
        j["junctions"].push_back(v);
    }
    return j.dump(2) + "\n";
}

Network parse_network(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream os;
        os << "network parse error at line " << line << ", column " << col;
        throw ConfigError(os.str());
    }
    return network_from_json(j);
}

} // namespace beltflow
