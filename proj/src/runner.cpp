#include "fracdiff/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fracdiff/fdm.hpp"
#include "fracdiff/fem.hpp"

namespace fracdiff {
namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string alpha_tag(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", alpha);
    return buf;
}

struct Member {
    double alpha;
    Scheme scheme;
};

void write_profile(const std::filesystem::path& path, const Grid& grid,
                   const SolutionField& field, int first_level) {
    const int last = field.stored_levels() - 1;
    std::vector<double> times =
        snapshot_times(grid.final_time, 4, grid.t(first_level));

    // map snapshot times onto stored levels, dropping duplicates
    std::set<int> levels;
    for (double t : times) {
        int f = static_cast<int>(std::round(t / grid.dt()));
        levels.insert(std::clamp(f, first_level, last));
    }

    std::ofstream out(path, std::ios::binary);
    out << "x";
    for (int f : levels) {
        out << ",t=" << num17(grid.t(f));
    }
    out << "\n";
    for (int i = 0; i <= grid.space_steps; ++i) {
        out << num17(grid.x(i));
        for (int f : levels) {
            out << "," << num17(field.value(f, i));
        }
        out << "\n";
    }
}

void write_trace(const std::filesystem::path& path, const Grid& grid,
                 const SolutionField& field, int probe_index) {
    std::ofstream out(path, std::ios::binary);
    out << "t,u\n";
    for (int f = 0; f < field.stored_levels(); ++f) {
        out << num17(grid.t(f)) << "," << num17(field.value(f, probe_index))
            << "\n";
    }
}

int thread_cap() {
    if (const char* env = std::getenv("FRACDIFF_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

std::vector<double> snapshot_times(double final_time, int count,
                                   double first_level_time) {
    if (count < 2) {
        throw InvalidCount("snapshot count must be >= 2");
    }
    std::vector<double> times{first_level_time};
    for (int i = count - 1; i >= 0; --i) {
        times.push_back(final_time / std::pow(2.0, i));
    }
    return times;
}

int run(const RunConfig& config, bool concurrent) {
    namespace fs = std::filesystem;
    if (config.alphas.empty()) {
        throw MissingRequired("alpha list is empty");
    }
    const fs::path out_dir = config.output_dir;
    fs::create_directories(out_dir);

    std::vector<Member> members;
    for (double alpha : config.alphas) {
        if (config.scheme != SchemeChoice::Fem) {
            members.push_back({alpha, Scheme::FdmExplicit});
        }
        if (config.scheme != SchemeChoice::Fdm) {
            members.push_back({alpha, Scheme::FemImplicit});
        }
    }

    struct Entry {
        SolverReport report;
        double dt = 0.0;
        std::string error;
    };
    std::vector<Entry> entries(members.size());

    auto execute = [&](size_t idx) {
        const Member& m = members[idx];
        Entry& entry = entries[idx];
        try {
            ProblemSpec spec = lower(config, m.alpha);
            validate(spec);
            SolveResult result =
                m.scheme == Scheme::FdmExplicit
                    ? solve_fdm(spec,
                                {.dt_policy = DtPolicy::ExplicitDt,
                                 .memory_window = config.memory_window})
                    : solve_fem(spec);
            entry.report = result.report;
            entry.dt = result.grid.dt();

            const std::string tag = std::string(scheme_name(m.scheme)) +
                                    "_a" + alpha_tag(m.alpha);
            const int probe_index = static_cast<int>(
                std::round(config.probe() / result.grid.h()));
            const int first_level =
                spec.order.initial_condition_count() - 1;
            write_profile(out_dir / ("profile_" + tag + ".csv"), result.grid,
                          result.field, first_level);
            write_trace(out_dir / ("trace_" + tag + ".csv"), result.grid,
                        result.field, probe_index);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
    };

    if (concurrent && members.size() > 1) {
        std::atomic<size_t> next{0};
        const int workers = std::min<int>(
            thread_cap(), static_cast<int>(members.size()));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < members.size();
                     i = next.fetch_add(1)) {
                    execute(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (size_t i = 0; i < members.size(); ++i) execute(i);
    }

    nlohmann::json report = nlohmann::json::array();
    bool diverged = false;
    bool failed = false;
    for (size_t i = 0; i < members.size(); ++i) {
        const Entry& e = entries[i];
        nlohmann::json item;
        item["scheme"] = scheme_name(members[i].scheme);
        item["alpha"] = members[i].alpha;
        if (!e.error.empty()) {
            item["error"] = e.error;
            failed = true;
        } else {
            item["dt"] = e.dt;
            if (e.report.stable_dt_max) {
                item["stable_dt_max"] = *e.report.stable_dt_max;
            } else {
                item["stable_dt_max"] = nullptr;
            }
            item["diverged"] = e.report.diverged;
            item["max_abs_value"] = e.report.max_abs_value;
            item["wall_time"] = e.report.wall_time;
            diverged = diverged || e.report.diverged;
        }
        report.push_back(std::move(item));
    }
    std::ofstream(out_dir / "report.json", std::ios::binary)
        << report.dump(2) << "\n";

    if (failed) return 1;
    return diverged ? 2 : 0;
}

} // namespace fracdiff
