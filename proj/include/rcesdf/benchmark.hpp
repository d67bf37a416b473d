#pragma once

#include <rcesdf/planner.hpp>

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace rcesdf
{

struct BenchmarkRecord
{
    Method method = Method::RcEsdf;
    int repetition = 0;
    SE2Pose start;
    SE2Pose goal;
    double field_build_time = 0.0;
    double total_opt_time = 0.0;
    int iterations = 0;
    double per_iteration_time = 0.0; ///< total_opt_time / iterations
    double length = 0.0;
    double mean_jerk = 0.0;
    bool planned = false; ///< false when plan() threw
    bool collision_free = false;
    bool limits_ok = false;
    Termination termination = Termination::MaxIter;
};

struct EndpointPair
{
    SE2Pose start;
    SE2Pose goal;
};

/// Seeded start/goal pairs: starts in the left quarter of the map, goals in
/// the right quarter, yaw uniform. Candidates are redrawn until the
/// footprint keeps `inflation` clearance at both ends and a reference path
/// exists. Throws Error after many rejections.
std::vector<EndpointPair> random_endpoints(const Scenario &scenario, int count, std::uint64_t seed);

/// Runs every method on the same endpoint pairs. Repetitions whose plan
/// throws are recorded as failures with zero timings.
std::vector<BenchmarkRecord> run_benchmark(const Scenario &scenario, const std::vector<Method> &methods, int reps,
                                           std::uint64_t seed);

/// `include_timing = false` drops every wall-clock field, which makes the
/// document reproducible bit for bit.
nlohmann::json benchmark_json(const std::vector<BenchmarkRecord> &records, bool include_timing = true);

struct BenchmarkSummary
{
    Method method = Method::RcEsdf;
    int runs = 0;
    int planned = 0;
    int successes = 0; ///< collision-free plans
    double field_build_time = 0.0;
    double total_opt_time = 0.0;
    double iterations = 0.0;
    double per_iteration_time = 0.0;
    double length = 0.0;
    double mean_jerk = 0.0;
};

/// Means over runs that produced a trajectory, per method in input order.
std::vector<BenchmarkSummary> summarize(const std::vector<BenchmarkRecord> &records);

void print_summary_table(std::ostream &out, const std::vector<BenchmarkSummary> &summary);

} // namespace rcesdf
