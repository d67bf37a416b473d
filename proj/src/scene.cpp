#include <rcesdf/json_io.hpp>
#include <rcesdf/scene.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace rcesdf
{

namespace
{

double cross(const Vec2 &a, const Vec2 &b) { return a.x() * b.y() - a.y() * b.x(); }

double segment_distance(const Vec2 &q, const Vec2 &a, const Vec2 &b)
{
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    double t = len2 > 0.0 ? (q - a).dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (a + t * ab - q).norm();
}

int orientation(const Vec2 &a, const Vec2 &b, const Vec2 &c)
{
    const double v = cross(b - a, c - a);
    if (v > 0.0)
        return 1;
    if (v < 0.0)
        return -1;
    return 0;
}

bool on_segment(const Vec2 &a, const Vec2 &b, const Vec2 &q)
{
    return q.x() >= std::min(a.x(), b.x()) && q.x() <= std::max(a.x(), b.x()) && q.y() >= std::min(a.y(), b.y()) &&
           q.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Vec2 &p1, const Vec2 &p2, const Vec2 &q1, const Vec2 &q2)
{
    const int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4)
        return true;
    if (o1 == 0 && on_segment(p1, p2, q1))
        return true;
    if (o2 == 0 && on_segment(p1, p2, q2))
        return true;
    if (o3 == 0 && on_segment(q1, q2, p1))
        return true;
    if (o4 == 0 && on_segment(q1, q2, p2))
        return true;
    return false;
}

double signed_area(const std::vector<Vec2> &v)
{
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        a += cross(v[i], v[(i + 1) % v.size()]);
    return 0.5 * a;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Vec2 &a, const Vec2 &b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto &p : pts)
    {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;)
    {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Snap to multiples of res, tolerant of representation error.
double aligned_floor(double v, double res) { return std::floor(v / res + 1e-9) * res; }
double aligned_ceil(double v, double res) { return std::ceil(v / res - 1e-9) * res; }

} // namespace

Polygon2D::Polygon2D(std::vector<Vec2> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.size() >= 2 && vertices_.front() == vertices_.back())
        vertices_.pop_back();
    if (vertices_.size() < 3)
        throw InvariantError("polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
    for (const auto &v : vertices_)
        if (!v.allFinite())
            throw InvariantError("polygon has a non-finite vertex");
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (vertices_[i] == vertices_[(i + 1) % n])
            throw InvariantError("polygon has repeated consecutive vertices");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j], vertices_[(j + 1) % n]))
                throw InvariantError("polygon is self-intersecting (edges " + std::to_string(i) + " and " +
                                     std::to_string(j) + ")");
        }
    const double a = signed_area(vertices_);
    if (a == 0.0)
        throw InvariantError("polygon has zero area");
    if (a < 0.0)
        std::reverse(vertices_.begin(), vertices_.end());
}

bool Polygon2D::contains(const Vec2 &q) const
{
    bool inside = false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
    {
        const Vec2 &a = vertices_[i], &b = vertices_[j];
        if ((a.y() > q.y()) != (b.y() > q.y()))
        {
            const double x = (b.x() - a.x()) * (q.y() - a.y()) / (b.y() - a.y()) + a.x();
            if (q.x() < x)
                inside = !inside;
        }
    }
    return inside;
}

double Polygon2D::boundary_distance(const Vec2 &q) const
{
    double d = std::numeric_limits<double>::infinity();
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        d = std::min(d, segment_distance(q, vertices_[i], vertices_[(i + 1) % n]));
    return d;
}

double Polygon2D::area() const { return signed_area(vertices_); }

Aabb Polygon2D::bounds() const
{
    Aabb b{vertices_.front(), vertices_.front()};
    for (const auto &v : vertices_)
    {
        b.min = b.min.cwiseMin(v);
        b.max = b.max.cwiseMax(v);
    }
    return b;
}

bool RobotShape::contains(const Vec2 &q) const
{
    return std::any_of(parts.begin(), parts.end(), [&](const Polygon2D &p) { return p.contains(q); });
}

double RobotShape::distance(const Vec2 &q) const
{
    if (contains(q))
        return 0.0;
    double d = std::numeric_limits<double>::infinity();
    for (const auto &p : parts)
        d = std::min(d, p.boundary_distance(q));
    return d;
}

Aabb RobotShape::bounds() const
{
    Aabb b = parts.front().bounds();
    for (const auto &p : parts)
    {
        const Aabb pb = p.bounds();
        b.min = b.min.cwiseMin(pb.min);
        b.max = b.max.cwiseMax(pb.max);
    }
    return b;
}

double RobotShape::circumradius() const
{
    double r = 0.0;
    for (const auto &p : parts)
        for (const auto &v : p.vertices())
            r = std::max(r, v.norm());
    return r;
}

double RobotShape::min_width() const
{
    std::vector<Vec2> pts;
    for (const auto &p : parts)
        pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
    const auto hull = convex_hull(pts);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i)
    {
        const Vec2 a = hull[i], b = hull[(i + 1) % hull.size()];
        const Vec2 dir = (b - a).normalized();
        double w = 0.0;
        for (const auto &q : hull)
            w = std::max(w, std::abs(cross(dir, q - a)));
        best = std::min(best, w);
    }
    return best;
}

bool check_robot_shape(const RobotShape &shape)
{
    if (shape.parts.empty())
        throw InvariantError("robot shape has no parts");
    const std::size_t n = shape.parts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto touches = [](const Polygon2D &a, const Polygon2D &b) {
        const auto &va = a.vertices();
        const auto &vb = b.vertices();
        for (std::size_t i = 0; i < va.size(); ++i)
            for (std::size_t j = 0; j < vb.size(); ++j)
                if (segments_intersect(va[i], va[(i + 1) % va.size()], vb[j], vb[(j + 1) % vb.size()]))
                    return true;
        return b.contains(va.front()) || a.contains(vb.front());
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (touches(shape.parts[i], shape.parts[j]))
                parent[find(i)] = find(j);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0))
            throw InvariantError("robot shape parts do not form a connected union");
    const Vec2 origin(0.0, 0.0);
    return shape.contains(origin) || shape.distance(origin) < 1e-12;
}

RobotShape make_rectangle(double length, double width)
{
    const double hl = 0.5 * length, hw = 0.5 * width;
    return RobotShape{{Polygon2D({{-hl, -hw}, {hl, -hw}, {hl, hw}, {-hl, hw}})}};
}

OccupancyGrid2D::OccupancyGrid2D(Vec2 origin_, double resolution_, int nx_, int ny_)
    : origin(std::move(origin_)), resolution(resolution_), nx(nx_), ny(ny_),
      occupancy(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), 0)
{
    if (!(resolution > 0.0))
        throw InvariantError("grid resolution must be positive");
    if (nx < 1 || ny < 1)
        throw InvariantError("grid dimensions must be at least 1x1");
}

std::optional<CellIndex> OccupancyGrid2D::cell_of(const Vec2 &q) const
{
    const double fx = (q.x() - origin.x()) / resolution;
    const double fy = (q.y() - origin.y()) / resolution;
    if (!(fx >= 0.0 && fy >= 0.0 && fx < nx && fy < ny))
        return std::nullopt;
    return CellIndex{static_cast<int>(fx), static_cast<int>(fy)};
}

std::size_t OccupancyGrid2D::occupied_count() const
{
    return static_cast<std::size_t>(std::count_if(occupancy.begin(), occupancy.end(), [](auto c) { return c != 0; }));
}

OccupancyGrid2D rasterize_shape(const RobotShape &shape, double resolution, double inflation)
{
    if (!(resolution > 0.0))
        throw InvariantError("rasterize_shape: resolution must be positive");
    if (!(inflation >= 0.0))
        throw InvariantError("rasterize_shape: inflation must be non-negative");
    const Aabb b = shape.bounds();
    const Vec2 lo(aligned_floor(b.min.x() - inflation, resolution) - resolution,
                  aligned_floor(b.min.y() - inflation, resolution) - resolution);
    const Vec2 hi(aligned_ceil(b.max.x() + inflation, resolution) + resolution,
                  aligned_ceil(b.max.y() + inflation, resolution) + resolution);
    const int nx = static_cast<int>(std::lround((hi.x() - lo.x()) / resolution));
    const int ny = static_cast<int>(std::lround((hi.y() - lo.y()) / resolution));
    OccupancyGrid2D grid(lo, resolution, nx, ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            grid.set(i, j, shape.distance(grid.cell_center(i, j)) <= inflation);
    return grid;
}

PointCloud2D pointcloud_from_grid(const OccupancyGrid2D &grid)
{
    PointCloud2D cloud;
    cloud.points.reserve(grid.occupied_count());
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            if (grid.occupied(i, j))
                cloud.points.push_back(grid.cell_center(i, j));
    return cloud;
}

OccupancyGrid2D grid_from_points(const PointCloud2D &cloud, double resolution, double margin,
                                 const std::vector<Vec2> &also_cover)
{
    std::vector<Vec2> all = cloud.points;
    all.insert(all.end(), also_cover.begin(), also_cover.end());
    Aabb b{{0.0, 0.0}, {resolution, resolution}};
    if (!all.empty())
    {
        b = {all.front(), all.front()};
        for (const auto &p : all)
        {
            b.min = b.min.cwiseMin(p);
            b.max = b.max.cwiseMax(p);
        }
    }
    const Vec2 lo(aligned_floor(b.min.x() - margin, resolution), aligned_floor(b.min.y() - margin, resolution));
    const Vec2 hi(aligned_ceil(b.max.x() + margin, resolution), aligned_ceil(b.max.y() + margin, resolution));
    const int nx = std::max(1, static_cast<int>(std::lround((hi.x() - lo.x()) / resolution)) + 1);
    const int ny = std::max(1, static_cast<int>(std::lround((hi.y() - lo.y()) / resolution)) + 1);
    OccupancyGrid2D grid(lo, resolution, nx, ny);
    for (const auto &p : cloud.points)
        if (auto c = grid.cell_of(p))
            grid.set(c->i, c->j, true);
    return grid;
}

std::vector<Vec2> footprint_samples(const RobotShape &shape, double spacing, bool include_boundary)
{
    if (!(spacing > 0.0))
        throw InvariantError("footprint_samples: spacing must be positive");
    std::vector<Vec2> out;
    const Aabb b = shape.bounds();
    const double x0 = aligned_floor(b.min.x(), spacing), y0 = aligned_floor(b.min.y(), spacing);
    const int nx = static_cast<int>(std::ceil((b.max.x() - x0) / spacing)) + 1;
    const int ny = static_cast<int>(std::ceil((b.max.y() - y0) / spacing)) + 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
        {
            const Vec2 c(x0 + (i + 0.5) * spacing, y0 + (j + 0.5) * spacing);
            if (shape.contains(c))
                out.push_back(c);
        }
    if (include_boundary)
        for (const auto &part : shape.parts)
        {
            const auto &v = part.vertices();
            for (std::size_t e = 0; e < v.size(); ++e)
            {
                const Vec2 a = v[e], c = v[(e + 1) % v.size()];
                const int n = std::max(1, static_cast<int>(std::ceil((c - a).norm() / spacing)));
                for (int k = 0; k < n; ++k)
                    out.push_back(a + (c - a) * (static_cast<double>(k) / n));
            }
        }
    return out;
}

bool pose_collision_free(const RobotShape &shape, const OccupancyGrid2D &grid, const SE2Pose &pose, double spacing)
{
    const Mat2 r = rotation(pose.yaw);
    for (const auto &s : footprint_samples(shape, spacing, true))
    {
        const auto cell = grid.cell_of(r * s + pose.p);
        if (!cell || grid.occupied(cell->i, cell->j))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// JSON

Vec2 vec_from_json(const nlohmann::json &j, const char *what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(what) + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json vec_to_json(const Vec2 &v) { return nlohmann::json::array({v.x(), v.y()}); }

SE2Pose pose_from_json(const nlohmann::json &j, const char *what)
{
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
        throw ParseError(std::string(what) + ": expected [x, y, yaw]");
    SE2Pose p{{j[0].get<double>(), j[1].get<double>()}, j[2].get<double>()};
    if (!p.p.allFinite() || !std::isfinite(p.yaw))
        throw InvariantError(std::string(what) + ": non-finite value");
    return p;
}

nlohmann::json pose_to_json(const SE2Pose &pose) { return nlohmann::json::array({pose.p.x(), pose.p.y(), pose.yaw}); }

namespace
{

template <class T> void read_opt(const nlohmann::json &obj, const char *key, const std::string &ctx, T &out)
{
    if (!obj.contains(key))
        return;
    try
    {
        out = obj.at(key).get<T>();
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ParseError(ctx + "." + key + ": " + e.what());
    }
}

void require_positive(double v, const std::string &name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvariantError("config." + name + " must be positive and finite");
}

void require_nonnegative(double v, const std::string &name)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw InvariantError("config." + name + " must be non-negative and finite");
}

} // namespace

PlannerConfig config_from_json(const nlohmann::json &j)
{
    PlannerConfig c;
    if (j.is_null())
        return c;
    if (!j.is_object())
        throw ParseError("config: expected an object");
    if (j.contains("weights"))
    {
        const auto &w = j.at("weights");
        read_opt(w, "position_smooth", "config.weights", c.weights.position_smooth);
        read_opt(w, "position_feasible", "config.weights", c.weights.position_feasible);
        read_opt(w, "yaw_smooth", "config.weights", c.weights.yaw_smooth);
        read_opt(w, "yaw_feasible", "config.weights", c.weights.yaw_feasible);
        read_opt(w, "collision", "config.weights", c.weights.collision);
    }
    if (j.contains("limits"))
    {
        const auto &l = j.at("limits");
        read_opt(l, "v_max", "config.limits", c.limits.v_max);
        read_opt(l, "a_max", "config.limits", c.limits.a_max);
        read_opt(l, "yaw_rate_max", "config.limits", c.limits.yaw_rate_max);
        read_opt(l, "yaw_acc_max", "config.limits", c.limits.yaw_acc_max);
    }
    if (j.contains("feasibility_penalty"))
    {
        const auto s = j.at("feasibility_penalty").get<std::string>();
        if (s == "hinge")
            c.feasibility_penalty = FeasibilityPenalty::Hinge;
        else if (s == "cubic")
            c.feasibility_penalty = FeasibilityPenalty::Cubic;
        else
            throw ParseError("config.feasibility_penalty: expected \"hinge\" or \"cubic\", got \"" + s + "\"");
    }
    read_opt(j, "rc_resolution", "config", c.rc_resolution);
    read_opt(j, "inflation", "config", c.inflation);
    read_opt(j, "validator_density", "config", c.validator_density);
    read_opt(j, "threads", "config", c.threads);
    if (j.contains("knot_span"))
    {
        const auto &k = j.at("knot_span");
        if (k.is_string() && k.get<std::string>() == "auto")
            c.knot_span.reset();
        else if (k.is_number())
            c.knot_span = k.get<double>();
        else
            throw ParseError("config.knot_span: expected a number or \"auto\"");
    }
    if (j.contains("yaw_seed"))
    {
        const auto s = j.at("yaw_seed").get<std::string>();
        if (s == "tangent")
            c.yaw_seed = YawSeed::Tangent;
        else if (s == "constant")
            c.yaw_seed = YawSeed::Constant;
        else
            throw ParseError("config.yaw_seed: expected \"tangent\" or \"constant\", got \"" + s + "\"");
    }
    if (j.contains("solver"))
    {
        const auto &s = j.at("solver");
        read_opt(s, "memory", "config.solver", c.solver.memory);
        read_opt(s, "max_iterations", "config.solver", c.solver.max_iterations);
        read_opt(s, "grad_tolerance", "config.solver", c.solver.grad_tolerance);
        read_opt(s, "rel_cost_tolerance", "config.solver", c.solver.rel_cost_tolerance);
        read_opt(s, "past", "config.solver", c.solver.past);
        read_opt(s, "wolfe_c1", "config.solver", c.solver.wolfe_c1);
        read_opt(s, "wolfe_c2", "config.solver", c.solver.wolfe_c2);
        read_opt(s, "max_line_search_steps", "config.solver", c.solver.max_line_search_steps);
    }

    require_nonnegative(c.weights.position_smooth, "weights.position_smooth");
    require_nonnegative(c.weights.position_feasible, "weights.position_feasible");
    require_nonnegative(c.weights.yaw_smooth, "weights.yaw_smooth");
    require_nonnegative(c.weights.yaw_feasible, "weights.yaw_feasible");
    require_nonnegative(c.weights.collision, "weights.collision");
    require_positive(c.limits.v_max, "limits.v_max");
    require_positive(c.limits.a_max, "limits.a_max");
    require_positive(c.limits.yaw_rate_max, "limits.yaw_rate_max");
    require_positive(c.limits.yaw_acc_max, "limits.yaw_acc_max");
    require_positive(c.rc_resolution, "rc_resolution");
    require_nonnegative(c.inflation, "inflation");
    require_positive(c.validator_density, "validator_density");
    if (c.knot_span)
        require_positive(*c.knot_span, "knot_span");
    if (c.solver.memory < 1)
        throw InvariantError("config.solver.memory must be at least 1");
    if (c.solver.past < 1)
        throw InvariantError("config.solver.past must be at least 1");
    if (!(c.solver.wolfe_c1 > 0.0 && c.solver.wolfe_c1 < c.solver.wolfe_c2 && c.solver.wolfe_c2 < 1.0))
        throw InvariantError("config.solver: require 0 < wolfe_c1 < wolfe_c2 < 1");
    if (c.solver.max_iterations < 1 || c.solver.max_line_search_steps < 1)
        throw InvariantError("config.solver: iteration limits must be positive");
    return c;
}

nlohmann::json config_to_json(const PlannerConfig &c)
{
    nlohmann::json j;
    j["weights"] = {{"position_smooth", c.weights.position_smooth},
                    {"position_feasible", c.weights.position_feasible},
                    {"yaw_smooth", c.weights.yaw_smooth},
                    {"yaw_feasible", c.weights.yaw_feasible},
                    {"collision", c.weights.collision}};
    j["limits"] = {{"v_max", c.limits.v_max},
                   {"a_max", c.limits.a_max},
                   {"yaw_rate_max", c.limits.yaw_rate_max},
                   {"yaw_acc_max", c.limits.yaw_acc_max}};
    j["feasibility_penalty"] = c.feasibility_penalty == FeasibilityPenalty::Hinge ? "hinge" : "cubic";
    j["rc_resolution"] = c.rc_resolution;
    j["inflation"] = c.inflation;
    if (c.knot_span)
        j["knot_span"] = *c.knot_span;
    else
        j["knot_span"] = "auto";
    j["validator_density"] = c.validator_density;
    j["yaw_seed"] = c.yaw_seed == YawSeed::Tangent ? "tangent" : "constant";
    j["threads"] = c.threads;
    j["solver"] = {{"memory", c.solver.memory},
                   {"max_iterations", c.solver.max_iterations},
                   {"grad_tolerance", c.solver.grad_tolerance},
                   {"rel_cost_tolerance", c.solver.rel_cost_tolerance},
                   {"past", c.solver.past},
                   {"wolfe_c1", c.solver.wolfe_c1},
                   {"wolfe_c2", c.solver.wolfe_c2},
                   {"max_line_search_steps", c.solver.max_line_search_steps}};
    return j;
}

namespace
{

std::string line_col(const std::string &text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            col = 1;
        }
        else
            ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const nlohmann::json &require(const nlohmann::json &obj, const char *key, const std::string &ctx)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(ctx + ": missing required field '" + key + "'");
    return obj.at(key);
}

OccupancyGrid2D grid_from_json(const nlohmann::json &g)
{
    const Vec2 origin = vec_from_json(require(g, "origin", "map.grid"), "map.grid.origin");
    const auto &res = require(g, "resolution", "map.grid");
    const auto &nx = require(g, "nx", "map.grid");
    const auto &ny = require(g, "ny", "map.grid");
    if (!res.is_number() || !nx.is_number_integer() || !ny.is_number_integer())
        throw ParseError("map.grid: resolution must be a number and nx, ny integers");
    OccupancyGrid2D grid(origin, res.get<double>(), nx.get<int>(), ny.get<int>());
    if (g.contains("occupied_cells"))
    {
        for (const auto &c : g.at("occupied_cells"))
        {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
                throw ParseError("map.grid.occupied_cells: expected [i, j] integer pairs");
            const int i = c[0].get<int>(), jj = c[1].get<int>();
            if (!grid.in_range(i, jj))
                throw InvariantError("map.grid.occupied_cells: cell [" + std::to_string(i) + ", " +
                                     std::to_string(jj) + "] outside the " + std::to_string(grid.nx) + "x" +
                                     std::to_string(grid.ny) + " grid");
            grid.set(i, jj, true);
        }
    }
    return grid;
}

nlohmann::json grid_to_json(const OccupancyGrid2D &grid)
{
    nlohmann::json cells = nlohmann::json::array();
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            if (grid.occupied(i, j))
                cells.push_back({i, j});
    return {{"origin", vec_to_json(grid.origin)},
            {"resolution", grid.resolution},
            {"nx", grid.nx},
            {"ny", grid.ny},
            {"occupied_cells", cells}};
}

} // namespace

Scenario parse_scenario(const std::string &text, const std::filesystem::path &base_dir)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError("scenario: JSON syntax error at " + line_col(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("scenario: top level must be an object");

    Scenario s;
    try
    {
        s.config = config_from_json(doc.contains("config") ? doc.at("config") : nlohmann::json());

        const auto &robot = require(doc, "robot", "scenario");
        const auto &parts = require(robot, "parts", "robot");
        if (!parts.is_array() || parts.empty())
            throw ParseError("robot.parts: expected a non-empty array of polygons");
        for (std::size_t k = 0; k < parts.size(); ++k)
        {
            std::vector<Vec2> verts;
            const std::string ctx = "robot.parts[" + std::to_string(k) + "]";
            if (!parts[k].is_array())
                throw ParseError(ctx + ": expected an array of [x, y]");
            for (const auto &v : parts[k])
                verts.push_back(vec_from_json(v, ctx.c_str()));
            try
            {
                s.robot.parts.emplace_back(std::move(verts));
            }
            catch (const InvariantError &e)
            {
                throw InvariantError(ctx + ": " + e.what());
            }
        }
        if (!check_robot_shape(s.robot))
            std::cerr << "warning: robot body origin lies outside the footprint\n";

        s.start = pose_from_json(require(doc, "start", "scenario"), "start");
        s.goal = pose_from_json(require(doc, "goal", "scenario"), "goal");

        const auto &map = require(doc, "map", "scenario");
        if (map.contains("grid"))
        {
            s.map_source = MapSource::Grid;
            s.grid = grid_from_json(map.at("grid"));
            s.cloud = pointcloud_from_grid(s.grid);
        }
        else if (map.contains("points"))
        {
            s.map_source = MapSource::Points;
            for (const auto &p : map.at("points"))
            {
                const Vec2 v = vec_from_json(p, "map.points");
                if (!v.allFinite())
                    throw InvariantError("map.points: non-finite coordinate");
                s.cloud.points.push_back(v);
            }
            const double margin = s.robot.circumradius() + s.config.inflation + 1.0;
            s.grid = grid_from_points(s.cloud, s.config.rc_resolution, margin, {s.start.p, s.goal.p});
        }
        else if (map.contains("pgm"))
        {
            s.map_source = MapSource::Pgm;
            s.pgm_path = map.at("pgm").get<std::string>();
            std::filesystem::path p(s.pgm_path);
            if (p.is_relative())
                p = base_dir / p;
            s.grid = load_pgm_grid(p);
            s.cloud = pointcloud_from_grid(s.grid);
        }
        else
            throw ParseError("map: expected one of 'grid', 'points' or 'pgm'");
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ParseError(std::string("scenario: ") + e.what());
    }

    const double spacing = s.config.validator_density;
    if (!pose_collision_free(s.robot, s.grid, s.start, spacing))
        throw InvariantError("scenario: start pose is in collision (or leaves the map)");
    if (!pose_collision_free(s.robot, s.grid, s.goal, spacing))
        throw InvariantError("scenario: goal pose is in collision (or leaves the map)");
    return s;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open scenario file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), path.parent_path());
}

std::string serialize_scenario(const Scenario &s)
{
    nlohmann::json doc;
    nlohmann::json parts = nlohmann::json::array();
    for (const auto &p : s.robot.parts)
    {
        nlohmann::json poly = nlohmann::json::array();
        for (const auto &v : p.vertices())
            poly.push_back(vec_to_json(v));
        parts.push_back(poly);
    }
    doc["robot"] = {{"parts", parts}};
    switch (s.map_source)
    {
    case MapSource::Grid:
        doc["map"] = {{"grid", grid_to_json(s.grid)}};
        break;
    case MapSource::Points: {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto &p : s.cloud.points)
            pts.push_back(vec_to_json(p));
        doc["map"] = {{"points", pts}};
        break;
    }
    case MapSource::Pgm:
        doc["map"] = {{"pgm", s.pgm_path}};
        break;
    }
    doc["start"] = pose_to_json(s.start);
    doc["goal"] = pose_to_json(s.goal);
    doc["config"] = config_to_json(s.config);
    return doc.dump(2);
}

OccupancyGrid2D load_pgm_grid(const std::filesystem::path &pgm)
{
    std::ifstream in(pgm, std::ios::binary);
    if (!in)
        throw Error("cannot open PGM file '" + pgm.string() + "'");
    std::string magic;
    in >> magic;
    if (magic != "P5")
        throw ParseError(pgm.string() + ": expected binary PGM (P5), got '" + magic + "'");
    auto next_int = [&]() {
        in >> std::ws;
        while (in.peek() == '#')
        {
            std::string skip;
            std::getline(in, skip);
            in >> std::ws;
        }
        int v = 0;
        if (!(in >> v))
            throw ParseError(pgm.string() + ": malformed PGM header");
        return v;
    };
    const int w = next_int(), h = next_int(), maxval = next_int();
    if (w < 1 || h < 1 || maxval < 1 || maxval > 255)
        throw ParseError(pgm.string() + ": unsupported PGM dimensions or depth");
    in.get();
    std::vector<unsigned char> pix(static_cast<std::size_t>(w) * h);
    if (!in.read(reinterpret_cast<char *>(pix.data()), static_cast<std::streamsize>(pix.size())))
        throw ParseError(pgm.string() + ": truncated PGM data");

    std::filesystem::path side = pgm;
    side.replace_extension(".json");
    std::ifstream sj(side);
    if (!sj)
        throw Error("missing PGM sidecar '" + side.string() + "'");
    nlohmann::json meta;
    try
    {
        meta = nlohmann::json::parse(sj);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError(side.string() + ": " + e.what());
    }
    const Vec2 origin = vec_from_json(require(meta, "origin", side.string()), "sidecar origin");
    const double res = require(meta, "resolution", side.string()).get<double>();
    const int threshold = meta.value("occupied_below", (maxval + 1) / 2);

    OccupancyGrid2D grid(origin, res, w, h);
    for (int row = 0; row < h; ++row)
        for (int i = 0; i < w; ++i)
            grid.set(i, h - 1 - row, pix[static_cast<std::size_t>(row) * w + i] < threshold);
    return grid;
}

void save_pgm_grid(const OccupancyGrid2D &grid, const std::filesystem::path &pgm)
{
    std::ofstream out(pgm, std::ios::binary);
    if (!out)
        throw Error("cannot write PGM file '" + pgm.string() + "'");
    out << "P5\n" << grid.nx << " " << grid.ny << "\n255\n";
    for (int row = 0; row < grid.ny; ++row)
        for (int i = 0; i < grid.nx; ++i)
            out.put(static_cast<char>(grid.occupied(i, grid.ny - 1 - row) ? 0 : 255));
    std::filesystem::path side = pgm;
    side.replace_extension(".json");
    std::ofstream sj(side);
    sj << nlohmann::json{{"origin", vec_to_json(grid.origin)}, {"resolution", grid.resolution}}.dump(2) << "\n";
}

} // namespace rcesdf
