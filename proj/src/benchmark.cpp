#include <rcesdf/benchmark.hpp>

#include <rcesdf/json_io.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

namespace rcesdf
{

std::vector<EndpointPair> random_endpoints(const Scenario &scenario, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const Aabb ext = scenario.grid.extent();
    const Vec2 size = ext.size();
    std::uniform_real_distribution<double> left(ext.min.x() + 0.05 * size.x(), ext.min.x() + 0.25 * size.x());
    std::uniform_real_distribution<double> right(ext.max.x() - 0.25 * size.x(), ext.max.x() - 0.05 * size.x());
    std::uniform_real_distribution<double> ys(ext.min.y() + 0.1 * size.y(), ext.max.y() - 0.1 * size.y());
    std::uniform_real_distribution<double> yaw(-M_PI, M_PI);

    const double margin = scenario.config.inflation + scenario.grid.resolution;
    const double clearance = 0.5 * scenario.robot.min_width();
    auto draw = [&](std::uniform_real_distribution<double> &xs) {
        for (int attempt = 0; attempt < 10000; ++attempt)
        {
            const SE2Pose p{{xs(rng), ys(rng)}, yaw(rng)};
            if (footprint_clearance(scenario.robot, scenario.grid, p) >= margin)
                return p;
        }
        throw Error("random_endpoints: no collision-free pose found in the sampling region");
    };

    std::vector<EndpointPair> out;
    int rejected = 0;
    while (static_cast<int>(out.size()) < count)
    {
        EndpointPair e{draw(left), draw(right)};
        try
        {
            astar_path(scenario.grid, e.start.p, e.goal.p, clearance);
            out.push_back(e);
        }
        catch (const NoPathError &)
        {
            if (++rejected > 1000)
                throw Error("random_endpoints: no connected start/goal pair found");
        }
    }
    return out;
}

std::vector<BenchmarkRecord> run_benchmark(const Scenario &scenario, const std::vector<Method> &methods, int reps,
                                           std::uint64_t seed)
{
    if (reps < 1)
        throw InvariantError("benchmark: repetitions must be at least 1");
    const auto pairs = random_endpoints(scenario, reps, seed);
    std::vector<BenchmarkRecord> records;
    for (const Method m : methods)
        for (int r = 0; r < reps; ++r)
        {
            Scenario s = scenario;
            s.start = pairs[r].start;
            s.goal = pairs[r].goal;
            BenchmarkRecord rec;
            rec.method = m;
            rec.repetition = r;
            rec.start = s.start;
            rec.goal = s.goal;
            try
            {
                const auto res = plan(s, m);
                rec.field_build_time = res.timings.field_build;
                rec.total_opt_time = res.report.total_time;
                rec.iterations = res.report.iterations;
                rec.per_iteration_time = rec.iterations > 0 ? rec.total_opt_time / rec.iterations : 0.0;
                rec.length = res.length;
                rec.mean_jerk = res.mean_jerk;
                rec.collision_free = res.validation.collision_free;
                rec.limits_ok = res.validation.violated_limits.empty();
                rec.termination = res.report.termination;
                rec.planned = true;
            }
            catch (const Error &)
            {
                rec.planned = false;
            }
            records.push_back(rec);
        }
    return records;
}

nlohmann::json benchmark_json(const std::vector<BenchmarkRecord> &records, bool include_timing)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : records)
    {
        nlohmann::json j = {{"method", to_string(r.method)},
                            {"repetition", r.repetition},
                            {"start", pose_to_json(r.start)},
                            {"goal", pose_to_json(r.goal)},
                            {"planned", r.planned},
                            {"iterations", r.iterations},
                            {"length", r.length},
                            {"mean_jerk", r.mean_jerk},
                            {"collision_free", r.collision_free},
                            {"limits_ok", r.limits_ok},
                            {"termination", to_string(r.termination)}};
        if (include_timing)
        {
            j["field_build_time"] = r.field_build_time;
            j["total_opt_time"] = r.total_opt_time;
            j["per_iteration_time"] = r.per_iteration_time;
        }
        arr.push_back(j);
    }
    return {{"records", arr}};
}

std::vector<BenchmarkSummary> summarize(const std::vector<BenchmarkRecord> &records)
{
    std::vector<BenchmarkSummary> out;
    for (const auto &r : records)
    {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto &s) { return s.method == r.method; });
        if (it == out.end())
        {
            out.push_back({});
            out.back().method = r.method;
            it = out.end() - 1;
        }
        ++it->runs;
        if (!r.planned)
            continue;
        ++it->planned;
        if (r.collision_free)
            ++it->successes;
        it->field_build_time += r.field_build_time;
        it->total_opt_time += r.total_opt_time;
        it->iterations += r.iterations;
        it->per_iteration_time += r.per_iteration_time;
        it->length += r.length;
        it->mean_jerk += r.mean_jerk;
    }
    for (auto &s : out)
        if (s.planned > 0)
        {
            const double n = s.planned;
            s.field_build_time /= n;
            s.total_opt_time /= n;
            s.iterations /= n;
            s.per_iteration_time /= n;
            s.length /= n;
            s.mean_jerk /= n;
        }
    return out;
}

void print_summary_table(std::ostream &out, const std::vector<BenchmarkSummary> &summary)
{
    out << std::left << std::setw(8) << "method" << std::right << std::setw(8) << "ok/runs" << std::setw(14)
        << "field [ms]" << std::setw(14) << "opt [ms]" << std::setw(10) << "iters" << std::setw(14) << "per-iter [ms]"
        << std::setw(12) << "length [m]" << std::setw(12) << "jerk" << '\n';
    for (const auto &s : summary)
    {
        const std::string ok = std::to_string(s.successes) + "/" + std::to_string(s.runs);
        out << std::left << std::setw(8) << to_string(s.method) << std::right << std::setw(8) << ok << std::fixed
            << std::setprecision(3) << std::setw(14) << 1e3 * s.field_build_time << std::setw(14)
            << 1e3 * s.total_opt_time << std::setprecision(1) << std::setw(10) << s.iterations
            << std::setprecision(4) << std::setw(14) << 1e3 * s.per_iteration_time << std::setprecision(2)
            << std::setw(12) << s.length << std::setw(12) << s.mean_jerk << '\n';
    }
}

} // namespace rcesdf
