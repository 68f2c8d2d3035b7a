#include "beltflow/scenario.hpp"

#include "beltflow/errors.hpp"

#include <numbers>

namespace beltflow {

std::vector<double> uniform_output_times(double horizon, int count) {
    if (!(horizon > 0.0) || count < 1) throw ConfigError("uniform_output_times: bad arguments");
    std::vector<double> t(count);
    for (int k = 1; k <= count; ++k) t[k - 1] = horizon * k / count;
    return t;
}

const std::vector<std::string>& builtin_scenario_names() {
    static const std::vector<std::string> names = {
        "test1", "test2", "test3_passive", "test4_active", "test5_merge"};
    return names;
}

Scenario builtin_scenario(const std::string& name) {
    const double pi = std::numbers::pi;
    const double center = -3.0 * pi / 5.0;
    auto hump = [&]() { return Profile::gaussian(1.0, center, 3.0, -pi, 0.0); };

    Scenario sc;
    sc.name = name;
    sc.dx = 5e-3;
    sc.dt = 1e-5;
    sc.delta = 1e-2;

    TopologyParams p;
    if (name == "test1" || name == "test2") {
        p.velocity = name == "test1" ? std::vector<double>{1.0, 2.0}
                                     : std::vector<double>{2.0, 1.0};
        p.capacity = {1.0, 1.0};
        sc.network = standard_topology(TopologyKind::OneToOne, p);
        sc.horizon = name == "test1" ? 2.6 : 1.7;
        sc.initial["1"] = hump();
    } else if (name == "test3_passive" || name == "test4_active") {
        p.velocity = {4.0, 1.0, 2.0};
        p.capacity = {1.0, 1.0, 1.0};
        p.mu = 0.5;
        p.active_diverge = name == "test4_active";
        sc.network = standard_topology(TopologyKind::OneToTwo, p);
        sc.horizon = 2.0;
        sc.initial["1"] = hump();
    } else if (name == "test5_merge") {
        p.velocity = {1.0, 1.0, 1.0};
        p.capacity = {1.0, 1.0, 1.0};
        p.q = 0.3;
        sc.network = standard_topology(TopologyKind::TwoToOne, p);
        sc.horizon = 4.0;
        sc.initial["1"] = hump();
        sc.initial["2"] = hump();
    } else {
        throw ConfigError("unknown builtin scenario '" + name + "'");
    }
    sc.output_times = uniform_output_times(sc.horizon, 100);
    return sc;
}

} // namespace beltflow
