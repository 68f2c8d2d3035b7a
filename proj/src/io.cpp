#include "beltflow/io.hpp"

#include "beltflow/errors.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace beltflow {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fields_csv(const Trajectory& trajectory) {
    std::string out = "arc_id,x,t,rho\n";
    for (const Frame& fr : trajectory.frames) {
        for (const auto& [id, grid] : trajectory.grids) {
            const std::vector<double>& rho = fr.state.fields.at(id);
            for (int j = 0; j < grid.n_cells; ++j) {
                out += id;
                out += ',';
                out += format_double(grid.center(j));
                out += ',';
                out += format_double(fr.time);
                out += ',';
                out += format_double(rho[j]);
                out += '\n';
            }
        }
    }
    return out;
}

std::string analytic_fields_csv(const Trajectory& trajectory, const AnalyticSolution& oracle) {
    std::string out = "arc_id,x,t,rho\n";
    for (const Frame& fr : trajectory.frames) {
        for (const auto& [id, grid] : trajectory.grids) {
            for (int j = 0; j < grid.n_cells; ++j) {
                double x = grid.center(j);
                out += id;
                out += ',';
                out += format_double(x);
                out += ',';
                out += format_double(fr.time);
                out += ',';
                out += format_double(oracle.evaluate(id, x, fr.time));
                out += '\n';
            }
        }
    }
    return out;
}

std::string compare_csv(const Trajectory& trajectory, const AnalyticSolution& oracle) {
    std::string out = "arc_id,x,t,numeric,exact,diff\n";
    for (const Frame& fr : trajectory.frames) {
        for (const auto& [id, grid] : trajectory.grids) {
            const std::vector<double>& rho = fr.state.fields.at(id);
            for (int j = 0; j < grid.n_cells; ++j) {
                double x = grid.center(j);
                double exact = oracle.evaluate(id, x, fr.time);
                out += id;
                out += ',';
                out += format_double(x);
                out += ',';
                out += format_double(fr.time);
                out += ',';
                out += format_double(rho[j]);
                out += ',';
                out += format_double(exact);
                out += ',';
                out += format_double(rho[j] - exact);
                out += '\n';
            }
        }
    }
    return out;
}

std::string study_csv(const std::vector<ErrorReport>& reports) {
    std::string out = "dx,dt,delta,l2_error,runtime_s\n";
    for (const ErrorReport& r : reports) {
        out += format_double(r.dx);
        out += ',';
        out += format_double(r.dt);
        out += ',';
        out += format_double(r.delta);
        out += ',';
        out += format_double(r.l2_error);
        out += ',';
        out += format_double(r.runtime_seconds);
        out += '\n';
    }
    return out;
}

std::string raster_pgm(const Trajectory& trajectory, const ArcId& arc,
                       double rho_max, double delta) {
    auto git = trajectory.grids.find(arc);
    if (git == trajectory.grids.end()) throw Error("raster_pgm: unknown arc '" + arc + "'");
    const ArcGrid& grid = git->second;
    const int w = grid.n_cells;
    const int h = static_cast<int>(trajectory.frames.size());
    std::string out = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(w) * h);
    const double scale = rho_max + delta;
    for (const Frame& fr : trajectory.frames) {
        const std::vector<double>& rho = fr.state.fields.at(arc);
        for (int j = 0; j < w; ++j) {
            double v = 255.0 * (1.0 - rho[j] / scale);
            int g = static_cast<int>(std::lround(std::clamp(v, 0.0, 255.0)));
            out += static_cast<char>(static_cast<unsigned char>(g));
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error("write failed for '" + path + "'");
}

} // namespace beltflow
