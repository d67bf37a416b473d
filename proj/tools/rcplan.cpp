// rcplan: plan, benchmark, inspect fields and validate trajectories.
//
// Exit codes: 0 success, 1 planning or validation failure, 2 input/output
// error (unreadable or malformed files, unwritable output directory).

#include <rcesdf/benchmark.hpp>
#include <rcesdf/env_esdf.hpp>
#include <rcesdf/io.hpp>
#include <rcesdf/planner.hpp>
#include <rcesdf/rc_esdf.hpp>
#include <rcesdf/scenarios.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace rcesdf;

namespace
{

constexpr int kExitFailure = 1;
constexpr int kExitIo = 2;

/// Input/output problem; maps to exit code 2.
struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Scenario read_scenario(const std::string &path)
{
    if (!fs::exists(path))
        throw IoError("scenario file not found: " + path);
    try
    {
        return load_scenario(path);
    }
    catch (const ParseError &e)
    {
        throw IoError(path + ": " + e.what());
    }
    catch (const InvariantError &e)
    {
        throw IoError(path + ": " + e.what());
    }
    catch (const Error &e)
    {
        throw IoError(e.what());
    }
}

fs::path ensure_dir(const std::string &dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory: " + dir);
    return dir;
}

std::ofstream open_out(const fs::path &p)
{
    std::ofstream out(p);
    if (!out)
        throw IoError("cannot write " + p.string());
    return out;
}

void write_json(const fs::path &p, const nlohmann::json &j)
{
    auto out = open_out(p);
    out << j.dump(2) << '\n';
}

int error_report(const fs::path &dir, const std::string &kind, const std::string &message)
{
    const nlohmann::json j = {{"error", kind}, {"message", message}};
    std::cout << j.dump(2) << '\n';
    if (!dir.empty())
        write_json(dir / "result.json", j);
    return kExitFailure;
}

std::vector<Method> parse_methods(const std::string &list)
{
    std::vector<Method> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item == "rc")
            out.push_back(Method::RcEsdf);
        else if (item == "wbfp")
            out.push_back(Method::Wbfp);
        else
            throw CLI::ValidationError("--methods", "unknown method '" + item + "' (expected rc or wbfp)");
    }
    if (out.empty())
        throw CLI::ValidationError("--methods", "no method given");
    return out;
}

struct PlanArgs
{
    std::string scenario;
    std::string output = "out";
    std::string method = "rc";
    bool trace = false;
    bool no_plot = false;
};

int cmd_plan(const PlanArgs &a)
{
    const Scenario s = read_scenario(a.scenario);
    const fs::path dir = ensure_dir(a.output);
    PlanResult res;
    try
    {
        res = plan(s, parse_methods(a.method).front());
    }
    catch (const NoPathError &e)
    {
        return error_report(dir, "no_path", e.what());
    }
    catch (const Error &e)
    {
        return error_report(dir, "plan_failed", e.what());
    }
    {
        auto out = open_out(dir / "trajectory.csv");
        write_trajectory_csv(out, res.trajectory);
    }
    write_json(dir / "control_points.json", control_points_json(res.trajectory));
    write_json(dir / "result.json", plan_result_json(res, a.trace));
    if (!a.no_plot)
    {
        auto out = open_out(dir / "plot.svg");
        write_plan_svg(out, s, res);
    }
    const auto &v = res.validation;
    std::cout << "planned " << res.length << " m in " << res.report.iterations << " iterations ("
              << 1e3 * res.timings.optimize << " ms); collision_free=" << std::boolalpha << v.collision_free
              << " min_clearance=" << v.min_clearance << " limits_ok=" << v.violated_limits.empty() << '\n';
    return v.ok() ? 0 : kExitFailure;
}

struct BenchArgs
{
    std::string scenario;
    std::string output = "out";
    std::string methods = "rc,wbfp";
    int reps = 20;
    std::uint64_t seed = 7;
    bool no_timing = false;
};

int cmd_benchmark(const BenchArgs &a)
{
    const Scenario s = read_scenario(a.scenario);
    const fs::path dir = ensure_dir(a.output);
    std::vector<BenchmarkRecord> records;
    try
    {
        records = run_benchmark(s, parse_methods(a.methods), a.reps, a.seed);
    }
    catch (const Error &e)
    {
        return error_report(dir, "benchmark_failed", e.what());
    }
    auto j = benchmark_json(records, !a.no_timing);
    j["seed"] = a.seed;
    j["repetitions"] = a.reps;
    write_json(dir / "benchmark.json", j);
    print_summary_table(std::cout, summarize(records));
    return 0;
}

struct FieldArgs
{
    std::string scenario;
    std::string output = "out";
    std::string which = "rc";
};

int cmd_field(const FieldArgs &a)
{
    const Scenario s = read_scenario(a.scenario);
    const fs::path dir = ensure_dir(a.output);
    const auto &cfg = s.config;
    ScalarField2D field;
    SignConvention conv;
    if (a.which == "rc")
    {
        field = build_rc_esdf(s.robot, cfg.rc_resolution, cfg.inflation).field;
        conv = SignConvention::InsideNegativeOutsideZero;
    }
    else
    {
        try
        {
            field = build_env_esdf(s.grid).field;
        }
        catch (const InvariantError &e)
        {
            return error_report(dir, "field_failed", e.what());
        }
        conv = SignConvention::InsideNegativeOutsidePositive;
    }
    {
        auto out = open_out(dir / ("field_" + a.which + ".txt"));
        write_field_dump(out, field, conv);
    }
    auto svg = open_out(dir / ("field_" + a.which + ".svg"));
    write_field_svg(svg, field);
    std::cout << "wrote " << (field.nx() + 1) * (field.ny() + 1) << " vertex values (" << to_string(conv) << ")\n";
    return 0;
}

struct ValidateArgs
{
    std::string trajectory;
    std::string scenario;
    double density = 0.05;
};

int cmd_validate(const ValidateArgs &a)
{
    const Scenario s = read_scenario(a.scenario);
    std::ifstream in(a.trajectory);
    if (!in)
        throw IoError("trajectory file not found: " + a.trajectory);
    std::optional<SampledView> traj;
    try
    {
        traj.emplace(read_trajectory_csv(in));
    }
    catch (const Error &e)
    {
        throw IoError(a.trajectory + ": " + e.what());
    }
    const auto rep = validate(*traj, s, a.density);
    std::cout << collision_report_json(rep).dump(2) << '\n';
    return rep.ok() ? 0 : kExitFailure;
}

int cmd_export(const std::string &output)
{
    const fs::path dir = ensure_dir(output);
    for (const auto &n : builtin_scenarios())
    {
        auto out = open_out(dir / (n.name + ".json"));
        out << serialize_scenario(n.scenario) << '\n';
        std::cout << (dir / (n.name + ".json")).string() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Whole-body SE(2) trajectory planning with a body-frame signed distance field"};
    app.require_subcommand(1);

    PlanArgs plan_args;
    auto *plan_cmd = app.add_subcommand("plan", "Plan a trajectory for a scenario");
    plan_cmd->add_option("scenario", plan_args.scenario, "Scenario JSON")->required();
    plan_cmd->add_option("-o,--output", plan_args.output, "Output directory");
    plan_cmd->add_option("--method", plan_args.method, "Collision model: rc or wbfp");
    plan_cmd->add_flag("--trace", plan_args.trace, "Include the per-iteration cost trace in result.json");
    plan_cmd->add_flag("--no-plot", plan_args.no_plot, "Skip plot.svg");

    BenchArgs bench_args;
    auto *bench_cmd = app.add_subcommand("benchmark", "Time methods on seeded random start/goal pairs");
    bench_cmd->add_option("scenario", bench_args.scenario, "Scenario JSON")->required();
    bench_cmd->add_option("-o,--output", bench_args.output, "Output directory");
    bench_cmd->add_option("--methods", bench_args.methods, "Comma-separated list of rc, wbfp");
    bench_cmd->add_option("--reps", bench_args.reps, "Repetitions per method")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_args.seed, "Random seed");
    bench_cmd->add_flag("--no-timing", bench_args.no_timing, "Omit wall-clock fields from benchmark.json");

    FieldArgs field_args;
    auto *field_cmd = app.add_subcommand("field", "Dump a distance field and its heatmap");
    field_cmd->add_option("scenario", field_args.scenario, "Scenario JSON")->required();
    field_cmd->add_option("-o,--output", field_args.output, "Output directory");
    field_cmd->add_option("--which", field_args.which, "rc (body frame) or env (world)")
        ->check(CLI::IsMember({"rc", "env"}));

    ValidateArgs val_args;
    auto *val_cmd = app.add_subcommand("validate", "Check a trajectory CSV against a scenario");
    val_cmd->add_option("trajectory", val_args.trajectory, "Trajectory CSV")->required();
    val_cmd->add_option("scenario", val_args.scenario, "Scenario JSON")->required();
    val_cmd->add_option("--density", val_args.density, "Sampling density in meters")->check(CLI::PositiveNumber);

    std::string export_dir = "scenarios";
    auto *export_cmd = app.add_subcommand("scenarios", "Write the built-in scenarios as JSON");
    export_cmd->add_option("-o,--output", export_dir, "Output directory");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e) == 0 ? 0 : kExitIo;
    }

    try
    {
        if (*plan_cmd)
            return cmd_plan(plan_args);
        if (*bench_cmd)
            return cmd_benchmark(bench_args);
        if (*field_cmd)
            return cmd_field(field_args);
        if (*val_cmd)
            return cmd_validate(val_args);
        if (*export_cmd)
            return cmd_export(export_dir);
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    catch (const CLI::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
