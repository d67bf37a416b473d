#include <rcesdf/planner.hpp>

#include <rcesdf/distance_field.hpp>

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>

namespace rcesdf
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v)
{
    std::ostringstream s;
    s << v;
    return s.str();
}

// ---------------------------------------------------------------------------
// Reference path

std::vector<std::uint8_t> blocked_cells(const OccupancyGrid2D &map, double clearance)
{
    SiteMask mask(map.nx, map.ny);
    mask.set = map.occupancy;
    const auto sq = edt_squared(mask, Exec::Parallel);
    std::vector<std::uint8_t> blocked(sq.size(), 0);
    for (std::size_t c = 0; c < sq.size(); ++c)
    {
        if (map.occupancy[c])
            blocked[c] = 1;
        else if (sq[c] < kEdtInfinity)
            blocked[c] = std::sqrt(sq[c]) * map.resolution - 0.5 * map.resolution < clearance;
    }
    return blocked;
}

// Grid traversal visiting every cell the segment touches. When the segment
// passes exactly (or within rounding) through a cell corner, both side cells
// are checked as well, so a shortcut never squeezes between diagonal
// neighbours.
bool segment_free(const OccupancyGrid2D &map, const std::vector<std::uint8_t> &blocked, const Vec2 &a, const Vec2 &b)
{
    const auto ca = map.cell_of(a), cb = map.cell_of(b);
    if (!ca || !cb)
        return false;
    auto is_blocked = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= map.nx || j >= map.ny)
            return true;
        return blocked[static_cast<std::size_t>(j) * map.nx + i] != 0;
    };
    int i = ca->i, j = ca->j;
    if (is_blocked(i, j))
        return false;
    const Vec2 u0 = (a - map.origin) / map.resolution, u1 = (b - map.origin) / map.resolution;
    const Vec2 d = u1 - u0;
    const int sx = d.x() > 0 ? 1 : (d.x() < 0 ? -1 : 0);
    const int sy = d.y() > 0 ? 1 : (d.y() < 0 ? -1 : 0);
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double delta_x = sx ? 1.0 / std::abs(d.x()) : inf;
    const double delta_y = sy ? 1.0 / std::abs(d.y()) : inf;
    double tx = sx ? ((sx > 0 ? i + 1 - u0.x() : u0.x() - i) * delta_x) : inf;
    double ty = sy ? ((sy > 0 ? j + 1 - u0.y() : u0.y() - j) * delta_y) : inf;
    constexpr double kCornerTol = 1e-9;
    const int steps = std::abs(cb->i - ca->i) + std::abs(cb->j - ca->j);
    for (int n = 0; n < steps + 2 && !(i == cb->i && j == cb->j); ++n)
    {
        if (std::min(tx, ty) > 1.0)
            break;
        if (std::abs(tx - ty) <= kCornerTol)
        {
            if (is_blocked(i + sx, j) || is_blocked(i, j + sy))
                return false;
            i += sx;
            j += sy;
            tx += delta_x;
            ty += delta_y;
        }
        else if (tx < ty)
        {
            i += sx;
            tx += delta_x;
        }
        else
        {
            j += sy;
            ty += delta_y;
        }
        if (is_blocked(i, j))
            return false;
    }
    return !is_blocked(cb->i, cb->j);
}

CellIndex endpoint_cell(const OccupancyGrid2D &map, const std::vector<std::uint8_t> &blocked, const Vec2 &p,
                        const char *what, double clearance)
{
    const auto c = map.cell_of(p);
    if (!c)
        throw NoPathError(std::string(what) + " (" + fmt(p.x()) + ", " + fmt(p.y()) + ") lies outside the map");
    if (blocked[static_cast<std::size_t>(c->j) * map.nx + c->i])
        throw NoPathError(std::string(what) + " (" + fmt(p.x()) + ", " + fmt(p.y()) + ") lies within clearance " +
                          fmt(clearance) + " m of an obstacle; try a smaller clearance");
    return *c;
}

// ---------------------------------------------------------------------------
// Validation geometry

double point_segment_distance(const Vec2 &q, const Vec2 &a, const Vec2 &b)
{
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    const double t = len2 > 0.0 ? std::clamp((q - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (a + t * ab - q).norm();
}

double cross(const Vec2 &a, const Vec2 &b) { return a.x() * b.y() - a.y() * b.x(); }

bool segments_intersect(const Vec2 &p1, const Vec2 &p2, const Vec2 &q1, const Vec2 &q2)
{
    const double d1 = cross(q2 - q1, p1 - q1), d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1), d4 = cross(p2 - p1, q2 - p1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

/// Distance between a world-frame simple polygon (given by its vertices)
/// and an axis-aligned square; 0 when they overlap.
double polygon_square_distance(const std::vector<Vec2> &poly, const Polygon2D &shape_part, const Mat2 &r,
                               const Vec2 &p, const Aabb &sq)
{
    const Vec2 corners[4] = {sq.min, {sq.max.x(), sq.min.y()}, sq.max, {sq.min.x(), sq.max.y()}};
    for (const auto &c : corners)
        if (shape_part.contains(r.transpose() * (c - p)))
            return 0.0;
    for (const auto &v : poly)
        if (sq.contains(v))
            return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < poly.size(); ++e)
    {
        const Vec2 &a = poly[e], &b = poly[(e + 1) % poly.size()];
        for (int k = 0; k < 4; ++k)
        {
            const Vec2 &c0 = corners[k], &c1 = corners[(k + 1) % 4];
            if (segments_intersect(a, b, c0, c1))
                return 0.0;
            best = std::min({best, point_segment_distance(c0, a, b), point_segment_distance(a, c0, c1)});
        }
    }
    return best;
}

/// Gap between the footprint at a pose and the nearest occupied cell or map
/// edge, capped at `cap`.
double footprint_gap(const RobotShape &shape, const OccupancyGrid2D &grid, const SE2Pose &pose, double cap)
{
    const Mat2 r = rotation(pose.yaw);
    const Aabb ext = grid.extent();
    double best = cap;
    std::vector<std::vector<Vec2>> world(shape.parts.size());
    Aabb box{Vec2::Constant(std::numeric_limits<double>::infinity()),
             Vec2::Constant(-std::numeric_limits<double>::infinity())};
    for (std::size_t k = 0; k < shape.parts.size(); ++k)
        for (const auto &v : shape.parts[k].vertices())
        {
            const Vec2 w = r * v + pose.p;
            world[k].push_back(w);
            box.min = box.min.cwiseMin(w);
            box.max = box.max.cwiseMax(w);
            best = std::min({best, w.x() - ext.min.x(), ext.max.x() - w.x(), w.y() - ext.min.y(),
                             ext.max.y() - w.y()});
        }
    const double res = grid.resolution;
    const int i0 = std::max(0, static_cast<int>(std::floor((box.min.x() - best - grid.origin.x()) / res)));
    const int j0 = std::max(0, static_cast<int>(std::floor((box.min.y() - best - grid.origin.y()) / res)));
    const int i1 = std::min(grid.nx - 1, static_cast<int>(std::floor((box.max.x() + best - grid.origin.x()) / res)));
    const int j1 = std::min(grid.ny - 1, static_cast<int>(std::floor((box.max.y() + best - grid.origin.y()) / res)));
    for (int j = j0; j <= j1; ++j)
        for (int i = i0; i <= i1; ++i)
        {
            if (!grid.occupied(i, j))
                continue;
            const Vec2 lo = grid.origin + Vec2(i * res, j * res);
            const Aabb sq{lo, lo + Vec2(res, res)};
            // Skip cells whose box is already farther than the best gap.
            const Vec2 gap = (box.min - sq.max).cwiseMax(sq.min - box.max).cwiseMax(0.0);
            if (gap.norm() >= best)
                continue;
            for (std::size_t k = 0; k < shape.parts.size(); ++k)
                best = std::min(best, polygon_square_distance(world[k], shape.parts[k], r, pose.p, sq));
        }
    return std::max(best, 0.0);
}

} // namespace

double footprint_clearance(const RobotShape &shape, const OccupancyGrid2D &grid, const SE2Pose &pose, double cap)
{
    return footprint_gap(shape, grid, pose, cap);
}

std::vector<Vec2> astar_path(const OccupancyGrid2D &map, const Vec2 &start, const Vec2 &goal, double clearance)
{
    if (map.nx < 1 || map.ny < 1)
        throw InvariantError("astar_path: empty map");
    const auto blocked = blocked_cells(map, clearance);
    const CellIndex s = endpoint_cell(map, blocked, start, "start", clearance);
    const CellIndex g = endpoint_cell(map, blocked, goal, "goal", clearance);

    const std::size_t n = blocked.size();
    auto id = [&](int i, int j) { return static_cast<std::size_t>(j) * map.nx + i; };
    std::vector<double> cost(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> parent(n, n);
    std::vector<std::uint8_t> closed(n, 0);
    auto h = [&](int i, int j) { return std::hypot(i - g.i, j - g.j); };

    using Entry = std::pair<double, std::size_t>; // (f, cell), ties broken by cell id
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    cost[id(s.i, s.j)] = 0.0;
    open.push({h(s.i, s.j), id(s.i, s.j)});
    const std::size_t target = id(g.i, g.j);
    while (!open.empty())
    {
        const auto [f, c] = open.top();
        open.pop();
        if (closed[c])
            continue;
        closed[c] = 1;
        if (c == target)
            break;
        const int ci = static_cast<int>(c % map.nx), cj = static_cast<int>(c / map.nx);
        for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di)
            {
                if (di == 0 && dj == 0)
                    continue;
                const int ni = ci + di, nj = cj + dj;
                if (!map.in_range(ni, nj) || blocked[id(ni, nj)])
                    continue;
                if (di != 0 && dj != 0 && (blocked[id(ci + di, cj)] || blocked[id(ci, cj + dj)]))
                    continue;
                const std::size_t nc = id(ni, nj);
                const double step = (di != 0 && dj != 0) ? M_SQRT2 : 1.0;
                if (cost[c] + step < cost[nc])
                {
                    cost[nc] = cost[c] + step;
                    parent[nc] = c;
                    open.push({cost[nc] + h(ni, nj), nc});
                }
            }
    }
    if (!closed[target])
        throw NoPathError("no path from start to goal with clearance " + fmt(clearance) +
                          " m; the narrowest passage may be narrower than " + fmt(2.0 * clearance) +
                          " m, try a smaller clearance");

    std::vector<Vec2> raw;
    for (std::size_t c = parent[target]; c != n && c != id(s.i, s.j); c = parent[c])
        raw.push_back(map.cell_center(static_cast<int>(c % map.nx), static_cast<int>(c / map.nx)));
    raw.push_back(start);
    std::reverse(raw.begin(), raw.end());
    raw.push_back(goal);

    std::vector<Vec2> path{raw.front()};
    std::size_t at = 0;
    while (at + 1 < raw.size())
    {
        std::size_t next = at + 1;
        for (std::size_t k = raw.size() - 1; k > at + 1; --k)
            if (segment_free(map, blocked, raw[at], raw[k]))
            {
                next = k;
                break;
            }
        path.push_back(raw[next]);
        at = next;
    }
    return path;
}

double polyline_length(std::span<const Vec2> path)
{
    double len = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i)
        len += (path[i] - path[i - 1]).norm();
    return len;
}

std::vector<Vec2> resample_path(std::span<const Vec2> path, double spacing)
{
    if (!(spacing > 0.0))
        throw InvariantError("resample_path: spacing must be positive");
    std::vector<Vec2> out;
    if (path.empty())
        return out;
    out.push_back(path.front());
    for (std::size_t i = 1; i < path.size(); ++i)
    {
        const Vec2 a = path[i - 1], b = path[i];
        const int n = std::max(1, static_cast<int>(std::ceil((b - a).norm() / spacing)));
        for (int k = 1; k <= n; ++k)
            out.push_back(a + (b - a) * (static_cast<double>(k) / n));
    }
    return out;
}

Allocation allocate(std::span<const Vec2> path, const PlannerConfig &config)
{
    const double length = polyline_length(path);
    const double v = config.limits.v_max;
    Allocation a;
    a.duration = 1.5 * length / v;
    const double spacing = kControlSpacingCells * config.rc_resolution;
    const double dt = config.knot_span.value_or(spacing * 1.5 / v);
    a.num_ctrl = std::max(BSplineSE2::kMinControlPoints, static_cast<int>(std::lround(a.duration / dt)) + 3);
    a.knot_span = (a.duration > 0.0 && !config.knot_span) ? a.duration / (a.num_ctrl - 3) : dt;
    return a;
}

std::vector<SE2Pose> init_yaw(std::span<const Vec2> path, double start_yaw, double goal_yaw, YawSeed seed)
{
    if (path.size() < 2)
        throw InvariantError("init_yaw: need at least two path points");
    const std::size_t n = path.size();
    std::vector<double> arc(n, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        arc[i] = arc[i - 1] + (path[i] - path[i - 1]).norm();
    const double length = arc.back();
    std::vector<SE2Pose> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i].p = path[i];

    if (seed == YawSeed::Constant || !(length > 0.0))
    {
        const double goal = unwrap_near(goal_yaw, start_yaw);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double w = length > 0.0 ? arc[i] / length : static_cast<double>(i) / (n - 1);
            out[i].yaw = start_yaw + w * (goal - start_yaw);
        }
        return out;
    }

    // Heading of the segment leaving each point (entering, for the last).
    // The footprint axis is what matters for clearance, so each heading is
    // taken modulo pi and placed nearest the previous one.
    std::vector<double> heading(n);
    double prev = start_yaw;
    for (std::size_t i = 0; i < n; ++i)
    {
        const std::size_t a = i + 1 < n ? i : i - 1;
        const Vec2 d = path[a + 1] - path[a];
        if (d.squaredNorm() > 0.0)
            prev = prev + std::remainder(std::atan2(d.y(), d.x()) - prev, M_PI);
        heading[i] = prev;
    }
    // Shortcut paths turn abruptly at their vertices; average headings over
    // a short arc window so the seed does not start with yaw spikes.
    const double half = std::min(kHeadingWindow, 0.1 * length);
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + heading[i];
    std::vector<double> smooth(n);
    for (std::size_t i = 0, lo = 0, hi = 0; i < n; ++i)
    {
        while (arc[i] - arc[lo] > half)
            ++lo;
        while (hi + 1 < n && arc[hi + 1] - arc[i] <= half)
            ++hi;
        smooth[i] = (prefix[hi + 1] - prefix[lo]) / static_cast<double>(hi + 1 - lo);
    }
    heading = std::move(smooth);

    const double goal = unwrap_near(goal_yaw, heading.back());
    const double blend = 0.1 * length;
    for (std::size_t i = 0; i < n; ++i)
    {
        double y = heading[i];
        if (arc[i] < blend)
            y = start_yaw + (arc[i] / blend) * (y - start_yaw);
        else if (arc[i] > length - blend)
            y = goal + ((length - arc[i]) / blend) * (y - goal);
        out[i].yaw = y;
    }
    out.front().yaw = start_yaw;
    out.back().yaw = goal;
    return out;
}

SampledView::SampledView(std::vector<double> times, std::vector<TrajectoryState> states)
    : times_(std::move(times)), states_(std::move(states))
{
    if (times_.empty() || times_.size() != states_.size())
        throw InvariantError("trajectory: need matching, non-empty time and state lists");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1]))
            throw InvariantError("trajectory: times must increase strictly (row " + std::to_string(i) + ")");
}

TrajectoryState SampledView::state(double t) const
{
    t += times_.front();
    if (t <= times_.front())
        return states_.front();
    if (t >= times_.back())
        return states_.back();
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - times_.begin()), lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    const auto &a = states_[lo], &b = states_[hi];
    TrajectoryState s;
    s.pose.p = a.pose.p + w * (b.pose.p - a.pose.p);
    s.pose.yaw = a.pose.yaw + w * (b.pose.yaw - a.pose.yaw);
    s.vel = a.vel + w * (b.vel - a.vel);
    s.acc = a.acc + w * (b.acc - a.acc);
    s.yaw_rate = a.yaw_rate + w * (b.yaw_rate - a.yaw_rate);
    s.yaw_acc = a.yaw_acc + w * (b.yaw_acc - a.yaw_acc);
    return s;
}

RateBounds SampledView::rate_bounds() const
{
    RateBounds r;
    for (std::size_t i = 0; i < states_.size(); ++i)
    {
        r.speed = std::max(r.speed, states_[i].vel.norm());
        r.yaw_rate = std::max(r.yaw_rate, std::abs(states_[i].yaw_rate));
        if (i > 0)
        {
            // Rows may be sparse; the chord speed bounds motion between them.
            const double dt = times_[i] - times_[i - 1];
            r.speed = std::max(r.speed, (states_[i].pose.p - states_[i - 1].pose.p).norm() / dt);
            r.yaw_rate = std::max(r.yaw_rate, std::abs(states_[i].pose.yaw - states_[i - 1].pose.yaw) / dt);
        }
    }
    return r;
}

CollisionReport validate(const TrajectoryView &trajectory, const Scenario &scenario, double density)
{
    return validate(trajectory, scenario, density, scenario.config.limits);
}

CollisionReport validate(const TrajectoryView &trajectory, const Scenario &scenario, double density,
                         const Limits &lim)
{
    if (!(density > 0.0))
        throw InvariantError("validate: density must be positive");
    const auto &grid = scenario.grid;
    const auto &shape = scenario.robot;
    const auto body = footprint_samples(shape, density, true);
    double reach = 0.0;
    for (const auto &b : body)
        reach = std::max(reach, b.norm());

    const double T = trajectory.duration();
    const auto rb = trajectory.rate_bounds();
    const double motion = (rb.speed + rb.yaw_rate * reach) * T;
    long steps = 1;
    while (motion / steps > density && steps < (1L << 22))
        steps *= 2;

    std::optional<ScalarField2D> depth_field;
    auto depth = [&](const Vec2 &w) {
        if (!grid.extent().contains(w))
        {
            const Aabb e = grid.extent();
            const Vec2 out = (e.min - w).cwiseMax(w - e.max).cwiseMax(0.0);
            return -out.norm();
        }
        if (!depth_field)
            depth_field = signed_field(grid, SignConvention::InsideNegativeOutsidePositive, Exec::Serial);
        return std::min(0.0, interpolate(*depth_field, w, OutOfBounds::Zero));
    };

    CollisionReport rep;
    rep.min_clearance = kClearanceCap;
    rep.time_samples = static_cast<int>(steps + 1);
    double max_v = 0.0, max_a = 0.0, max_w = 0.0, max_wa = 0.0;
    for (long k = 0; k <= steps; ++k)
    {
        const double t = T * static_cast<double>(k) / static_cast<double>(steps);
        const auto st = trajectory.state(t);
        max_v = std::max(max_v, st.vel.norm());
        max_a = std::max(max_a, st.acc.norm());
        max_w = std::max(max_w, std::abs(st.yaw_rate));
        max_wa = std::max(max_wa, std::abs(st.yaw_acc));

        const Mat2 r = rotation(st.pose.yaw);
        bool hit = false;
        double worst = 0.0;
        for (const auto &b : body)
        {
            const Vec2 w = r * b + st.pose.p;
            const auto cell = grid.cell_of(w);
            if (!cell || grid.occupied(cell->i, cell->j))
            {
                hit = true;
                worst = std::min(worst, depth(w));
            }
        }
        const double clearance = hit ? worst : footprint_gap(shape, grid, st.pose, rep.min_clearance);
        if (hit)
            rep.collision_free = false;
        if (clearance < rep.min_clearance)
        {
            rep.min_clearance = clearance;
            rep.worst_time = t;
        }
    }

    auto check = [&](const char *name, double observed, double limit) {
        if (observed > kLimitTolerance * limit)
            rep.violated_limits.push_back({name, observed, limit});
    };
    check("speed", max_v, lim.v_max);
    check("acceleration", max_a, lim.a_max);
    check("yaw_rate", max_w, lim.yaw_rate_max);
    check("yaw_acceleration", max_wa, lim.yaw_acc_max);
    return rep;
}

const char *to_string(Method m) { return m == Method::RcEsdf ? "rc" : "wbfp"; }

std::unique_ptr<CollisionSetup> make_collision_setup(const Scenario &scenario, const PlannerConfig &config,
                                                     Method method)
{
    auto setup = std::make_unique<CollisionSetup>();
    setup->method = method;
    if (method == Method::RcEsdf)
    {
        setup->rc = build_rc_esdf(scenario.robot, config.rc_resolution, config.inflation);
        setup->index = std::make_unique<PointIndex>(scenario.cloud);
        setup->model = std::make_unique<RcCollisionModel>(setup->rc, *setup->index);
    }
    else
    {
        const double padding = scenario.robot.circumradius() + config.inflation + 1.0;
        setup->env = build_env_esdf(scenario.grid, padding);
        setup->samples = make_body_samples(scenario.robot, config.rc_resolution);
        setup->model = std::make_unique<WbfpCollisionModel>(setup->env, setup->samples, config.inflation);
    }
    return setup;
}

PlanResult plan(const Scenario &scenario, const PlannerConfig &config, Method method)
{
    if (config.threads > 0)
        omp_set_num_threads(config.threads);
    PlanResult res;
    res.method = method;

    auto t0 = Clock::now();
    const auto setup = make_collision_setup(scenario, config, method);
    res.timings.field_build = seconds_since(t0);

    t0 = Clock::now();
    const double clearance = 0.5 * scenario.robot.min_width();
    res.reference_path = astar_path(scenario.grid, scenario.start.p, scenario.goal.p, clearance);
    const auto dense = resample_path(res.reference_path, config.rc_resolution);
    const auto poses = init_yaw(dense, scenario.start.yaw, scenario.goal.yaw, config.yaw_seed);
    const auto alloc = allocate(res.reference_path, config);
    BSplineSE2 spline = fit_from_path(poses, alloc.knot_span, alloc.num_ctrl);
    res.initial = spline;
    res.timings.init = seconds_since(t0);

    t0 = Clock::now();
    BSplineSE2 work = spline;
    const Objective objective = [&](std::span<const double> x, std::span<double> grad) {
        unpack_free(x, work);
        try
        {
            const auto c = total_cost(work, config.weights, config.limits, *setup->model, config.feasibility_penalty);
            std::copy(c.gradient.begin(), c.gradient.end(), grad.begin());
            return c.total;
        }
        catch (const OutOfBoundsError &)
        {
            std::fill(grad.begin(), grad.end(), 0.0);
            return std::numeric_limits<double>::infinity();
        }
    };
    auto result = minimize(objective, pack_free(spline), config.solver);
    unpack_free(result.x, spline);
    res.report = std::move(result.report);
    res.timings.optimize = seconds_since(t0);
    res.final_cost = total_cost(spline, config.weights, config.limits, *setup->model, config.feasibility_penalty);
    res.trajectory = std::move(spline);

    t0 = Clock::now();
    res.validation = validate(SplineView(res.trajectory), scenario, config.validator_density, config.limits);
    res.timings.validate = seconds_since(t0);

    res.length = path_length(res.trajectory);
    res.mean_jerk = mean_jerk(res.trajectory);
    return res;
}

} // namespace rcesdf
