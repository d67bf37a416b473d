#include <rcesdf/io.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace rcesdf
{

namespace
{

constexpr const char *kCsvHeader = "t,x,y,yaw,vx,vy,yaw_rate,ax,ay,yaw_acc";

/// SVG y grows downward; flip around the map extent.
struct Canvas
{
    Aabb world;
    double scale = 50.0; // pixels per meter

    double x(double wx) const { return (wx - world.min.x()) * scale; }
    double y(double wy) const { return (world.max.y() - wy) * scale; }
    double width() const { return world.size().x() * scale; }
    double height() const { return world.size().y() * scale; }
};

void svg_open(std::ostream &out, const Canvas &c)
{
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
        << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void polyline(std::ostream &out, const Canvas &c, const std::vector<Vec2> &pts, const char *style, bool closed)
{
    out << '<' << (closed ? "polygon" : "polyline") << " points=\"";
    for (const auto &p : pts)
        out << c.x(p.x()) << ',' << c.y(p.y()) << ' ';
    out << "\" " << style << "/>\n";
}

} // namespace

void write_trajectory_csv(std::ostream &out, const BSplineSE2 &spline, double dt)
{
    if (!(dt > 0.0))
        throw InvariantError("write_trajectory_csv: dt must be positive");
    const double T = spline.duration();
    const long n = std::max(1L, static_cast<long>(std::ceil(T / dt - 1e-9)));
    out << kCsvHeader << '\n' << std::setprecision(17);
    for (long k = 0; k <= n; ++k)
    {
        const double t = std::min(T, k * dt);
        const auto s = evaluate(spline, t);
        out << t << ',' << s.pose.p.x() << ',' << s.pose.p.y() << ',' << s.pose.yaw << ',' << s.vel.x() << ','
            << s.vel.y() << ',' << s.yaw_rate << ',' << s.acc.x() << ',' << s.acc.y() << ',' << s.yaw_acc << '\n';
    }
}

SampledView read_trajectory_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("trajectory csv: empty input");
    if (line.rfind("t,x,y,yaw", 0) != 0)
        throw ParseError("trajectory csv: line 1: expected header starting with 't,x,y,yaw'");
    std::vector<double> times;
    std::vector<TrajectoryState> states;
    int lineno = 1;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
        {
            try
            {
                std::size_t used = 0;
                v.push_back(std::stod(cell, &used));
                if (used != cell.size())
                    throw std::invalid_argument(cell);
            }
            catch (const std::exception &)
            {
                throw ParseError("trajectory csv: line " + std::to_string(lineno) + ": bad number '" + cell + "'");
            }
        }
        if (v.size() != 7 && v.size() != 10)
            throw ParseError("trajectory csv: line " + std::to_string(lineno) + ": expected 7 or 10 columns, got " +
                             std::to_string(v.size()));
        TrajectoryState s;
        s.pose = {{v[1], v[2]}, v[3]};
        s.vel = {v[4], v[5]};
        s.yaw_rate = v[6];
        if (v.size() == 10)
        {
            s.acc = {v[7], v[8]};
            s.yaw_acc = v[9];
        }
        times.push_back(v[0]);
        states.push_back(s);
    }
    if (times.empty())
        throw ParseError("trajectory csv: no samples");
    return SampledView(std::move(times), std::move(states));
}

nlohmann::json control_points_json(const BSplineSE2 &spline)
{
    nlohmann::json pos = nlohmann::json::array(), yaw = nlohmann::json::array();
    for (const auto &q : spline.positions())
        pos.push_back({q.x(), q.y()});
    for (double y : spline.yaws())
        yaw.push_back(y);
    return {{"degree", BSplineSE2::kDegree},
            {"knot_span", spline.knot_span()},
            {"duration", spline.duration()},
            {"positions", pos},
            {"yaws", yaw}};
}

nlohmann::json collision_report_json(const CollisionReport &r)
{
    nlohmann::json v = nlohmann::json::array();
    for (const auto &l : r.violated_limits)
        v.push_back({{"quantity", l.quantity}, {"max_observed", l.max_observed}, {"limit", l.limit}});
    return {{"collision_free", r.collision_free},
            {"min_clearance", r.min_clearance},
            {"worst_time", r.worst_time},
            {"time_samples", r.time_samples},
            {"violated_limits", v},
            {"ok", r.ok()}};
}

nlohmann::json solve_report_json(const SolveReport &r, bool include_trace)
{
    nlohmann::json j = {{"iterations", r.iterations},
                        {"evaluations", r.evaluations},
                        {"final_cost", r.final_cost},
                        {"final_grad_norm", r.final_grad_norm},
                        {"termination", to_string(r.termination)},
                        {"total_time", r.total_time},
                        {"objective_time", r.objective_time}};
    if (include_trace)
        j["trace"] = r.trace;
    return j;
}

nlohmann::json plan_result_json(const PlanResult &res, bool include_trace)
{
    const auto &c = res.final_cost;
    return {{"method", to_string(res.method)},
            {"timings",
             {{"field_build", res.timings.field_build},
              {"init", res.timings.init},
              {"optimize", res.timings.optimize},
              {"validate", res.timings.validate}}},
            {"report", solve_report_json(res.report, include_trace)},
            {"cost",
             {{"total", c.total},
              {"position_smooth", c.position_smooth},
              {"position_feasible", c.position_feasible},
              {"yaw_smooth", c.yaw_smooth},
              {"yaw_feasible", c.yaw_feasible},
              {"collision", c.collision}}},
            {"validation", collision_report_json(res.validation)},
            {"length", res.length},
            {"mean_jerk", res.mean_jerk},
            {"control_points", res.trajectory.size()},
            {"duration", res.trajectory.duration()}};
}

void write_plan_svg(std::ostream &out, const Scenario &scenario, const PlanResult &result)
{
    const auto &g = scenario.grid;
    Canvas c{g.extent()};
    svg_open(out, c);
    const double px = g.resolution * c.scale;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (g.occupied(i, j))
            {
                const Vec2 lo = g.origin + Vec2(i * g.resolution, (j + 1) * g.resolution);
                out << "<rect x=\"" << c.x(lo.x()) << "\" y=\"" << c.y(lo.y()) << "\" width=\"" << px
                    << "\" height=\"" << px << "\" fill=\"#333\"/>\n";
            }
    polyline(out, c, result.reference_path, "fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"", false);

    const auto &spline = result.trajectory;
    for (int k = 0; k < constraint_point_count(spline); ++k)
    {
        const auto pose = constraint_point(spline, k);
        const Mat2 r = rotation(pose.yaw);
        for (const auto &part : scenario.robot.parts)
        {
            std::vector<Vec2> w;
            for (const auto &v : part.vertices())
                w.push_back(r * v + pose.p);
            polyline(out, c, w, "fill=\"#4a90d9\" fill-opacity=\"0.08\" stroke=\"#4a90d9\" stroke-width=\"0.6\"",
                     true);
        }
    }
    std::vector<Vec2> curve;
    const int samples = 400;
    for (int i = 0; i <= samples; ++i)
        curve.push_back(evaluate(spline, spline.duration() * i / samples).pose.p);
    polyline(out, c, curve, "fill=\"none\" stroke=\"#d0342c\" stroke-width=\"2\"", false);
    out << "</svg>\n";
}

void write_field_svg(std::ostream &out, const ScalarField2D &field)
{
    Canvas c{field.bounds()};
    c.scale = std::max(2.0, 600.0 / std::max(field.bounds().size().x(), field.bounds().size().y()));
    // Cells of the canvas are centered on vertices, so pad by half a cell.
    const double h = 0.5 * field.resolution();
    c.world.min -= Vec2(h, h);
    c.world.max += Vec2(h, h);
    svg_open(out, c);
    double lo = 0.0, hi = 0.0;
    for (double v : field.values())
    {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double px = field.resolution() * c.scale;
    for (int j = 0; j < field.vertices_y(); ++j)
        for (int i = 0; i < field.vertices_x(); ++i)
        {
            const double v = field.vertex(i, j);
            int r = 255, g = 255, b = 255;
            if (v < 0.0 && lo < 0.0)
                r = g = static_cast<int>(std::lround(255.0 * (1.0 - v / lo)));
            else if (v > 0.0 && hi > 0.0)
                g = b = static_cast<int>(std::lround(255.0 * (1.0 - v / hi)));
            const Vec2 p = field.vertex_position(i, j) + Vec2(-h, h);
            out << "<rect x=\"" << c.x(p.x()) << "\" y=\"" << c.y(p.y()) << "\" width=\"" << px << "\" height=\""
                << px << "\" fill=\"rgb(" << r << ',' << g << ',' << b << ")\"/>\n";
        }
    out << "</svg>\n";
}

} // namespace rcesdf
