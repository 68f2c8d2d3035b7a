#include "beltflow/experiments.hpp"

#include "beltflow/errors.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace beltflow {

double l2_error(const Trajectory& trajectory, const AnalyticSolution& oracle) {
    if (trajectory.frames.empty()) throw Error("l2_error: empty trajectory");
    double acc = 0.0;
    for (const Frame& fr : trajectory.frames) {
        for (const auto& [id, grid] : trajectory.grids) {
            auto it = fr.state.fields.find(id);
            if (it == fr.state.fields.end() ||
                static_cast<int>(it->second.size()) != grid.n_cells)
                throw Error("l2_error: trajectory fields do not match their grids");
            const std::vector<double>& rho = it->second;
            for (int j = 0; j < grid.n_cells; ++j) {
                double d = rho[j] - oracle.evaluate(id, grid.center(j), fr.time);
                acc += grid.dx * d * d;
            }
        }
    }
    return std::sqrt(acc / static_cast<double>(trajectory.frames.size()));
}

int study_thread_cap() {
    if (const char* env = std::getenv("BELTFLOW_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

std::vector<ErrorReport> run_rows(const Scenario& base,
                                  const std::vector<Scenario>& rows) {
    AnalyticSolution oracle = build_analytic(base);
    std::vector<ErrorReport> reports(rows.size());

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= rows.size()) return;
            try {
                auto start = std::chrono::steady_clock::now();
                Trajectory traj = run_simulation(rows[i]);
                double err = l2_error(traj, oracle);
                std::chrono::duration<double> secs =
                    std::chrono::steady_clock::now() - start;
                reports[i] = {traj.grids.begin()->second.dx, rows[i].dt, rows[i].delta,
                              err, secs.count()};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    int n_threads = std::min<int>(study_thread_cap(), static_cast<int>(rows.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

} // namespace

std::vector<ErrorReport> convergence_study(const Scenario& base,
                                           const std::vector<std::pair<double, double>>& rows) {
    std::vector<Scenario> runs;
    runs.reserve(rows.size());
    for (const auto& [dx, dt] : rows) {
        Scenario s = base;
        s.dx = dx;
        s.dt = dt;
        runs.push_back(std::move(s));
    }
    return run_rows(base, runs);
}

std::vector<ErrorReport> smoothing_study(const Scenario& base,
                                         const std::vector<double>& deltas,
                                         double dx, double dt) {
    std::vector<Scenario> runs;
    runs.reserve(deltas.size());
    for (double delta : deltas) {
        Scenario s = base;
        s.dx = dx;
        s.dt = dt;
        s.delta = delta;
        runs.push_back(std::move(s));
    }
    return run_rows(base, runs);
}

} // namespace beltflow
