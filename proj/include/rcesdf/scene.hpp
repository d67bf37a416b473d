#pragma once

#include <rcesdf/config.hpp>
#include <rcesdf/types.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rcesdf
{

/// Simple polygon, counter-clockwise after construction.
class Polygon2D
{
  public:
    /// Throws InvariantError for fewer than 3 vertices, zero area or
    /// self-intersection. Clockwise input is reversed.
    explicit Polygon2D(std::vector<Vec2> vertices);

    const std::vector<Vec2> &vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    bool contains(const Vec2 &q) const;
    /// Euclidean distance from q to the polygon boundary.
    double boundary_distance(const Vec2 &q) const;
    double area() const;
    Aabb bounds() const;

    bool operator==(const Polygon2D &o) const { return vertices_ == o.vertices_; }

  private:
    std::vector<Vec2> vertices_;
};

/// Robot footprint as a union of simple polygons in the body frame. The
/// rotation center is the body origin.
struct RobotShape
{
    std::vector<Polygon2D> parts;

    bool contains(const Vec2 &q) const;
    /// Distance from q to the union: 0 inside, boundary distance outside.
    double distance(const Vec2 &q) const;
    Aabb bounds() const;
    /// Largest distance from the body origin to a vertex.
    double circumradius() const;
    /// Minimum over directions of the projected extent of the footprint.
    double min_width() const;

    bool operator==(const RobotShape &o) const { return parts == o.parts; }
};

/// Throws InvariantError when parts are empty or the union is disconnected.
/// Returns false (and the caller may warn) when the origin lies outside.
bool check_robot_shape(const RobotShape &shape);

RobotShape make_rectangle(double length, double width);

struct CellIndex
{
    int i = 0;
    int j = 0;
    bool operator==(const CellIndex &) const = default;
};

/// Occupancy grid; cell (i, j) has its center at
/// origin + ((i + 0.5) res, (j + 0.5) res).
struct OccupancyGrid2D
{
    Vec2 origin{0.0, 0.0};
    double resolution = 0.1;
    int nx = 0;
    int ny = 0;
    std::vector<std::uint8_t> occupancy; ///< row-major, index j * nx + i

    OccupancyGrid2D() = default;
    OccupancyGrid2D(Vec2 origin, double resolution, int nx, int ny);

    bool occupied(int i, int j) const { return occupancy[static_cast<std::size_t>(j) * nx + i] != 0; }
    void set(int i, int j, bool v) { occupancy[static_cast<std::size_t>(j) * nx + i] = v ? 1 : 0; }
    bool in_range(int i, int j) const { return i >= 0 && j >= 0 && i < nx && j < ny; }
    Vec2 cell_center(int i, int j) const
    {
        return origin + Vec2((i + 0.5) * resolution, (j + 0.5) * resolution);
    }
    /// Cell containing q, or nullopt outside the grid.
    std::optional<CellIndex> cell_of(const Vec2 &q) const;
    std::size_t occupied_count() const;
    Aabb extent() const { return {origin, origin + Vec2(nx * resolution, ny * resolution)}; }

    bool operator==(const OccupancyGrid2D &) const = default;
};

struct PointCloud2D
{
    std::vector<Vec2> points;
    bool operator==(const PointCloud2D &) const = default;
};

enum class MapSource
{
    Grid,
    Points,
    Pgm
};

struct Scenario
{
    RobotShape robot;
    OccupancyGrid2D grid; ///< always populated; derived from points when needed
    PointCloud2D cloud;   ///< always populated; derived from grid when needed
    MapSource map_source = MapSource::Grid;
    std::string pgm_path; ///< when map_source == Pgm, as written in the document
    SE2Pose start;
    SE2Pose goal;
    PlannerConfig config;

    bool operator==(const Scenario &) const = default;
};

/// Cell-center rasterization of the footprint dilated by `inflation`.
OccupancyGrid2D rasterize_shape(const RobotShape &shape, double resolution, double inflation);

/// One point per occupied cell, at the cell center.
PointCloud2D pointcloud_from_grid(const OccupancyGrid2D &grid);

/// Marks every cell containing at least one point. The grid covers the
/// bounding box of the points and of `also_cover`, plus `margin`, aligned to
/// multiples of resolution.
OccupancyGrid2D grid_from_points(const PointCloud2D &cloud, double resolution, double margin,
                                 const std::vector<Vec2> &also_cover = {});

/// Body-frame points covering the footprint: centers of the cells of an
/// aligned grid at `spacing` that lie inside the footprint, optionally
/// followed by boundary points spaced at most `spacing` apart.
std::vector<Vec2> footprint_samples(const RobotShape &shape, double spacing, bool include_boundary);

/// True when no footprint sample at `pose` falls in an occupied cell or
/// outside the grid.
bool pose_collision_free(const RobotShape &shape, const OccupancyGrid2D &grid, const SE2Pose &pose,
                         double spacing);

Scenario load_scenario(const std::filesystem::path &path);
Scenario parse_scenario(const std::string &text, const std::filesystem::path &base_dir = {});
std::string serialize_scenario(const Scenario &scenario);

/// Binary PGM (P5). Dark pixels (< 128) are occupied; row 0 is the top of
/// the map. Origin and resolution come from a sidecar JSON next to the
/// image (same stem, `.json`).
OccupancyGrid2D load_pgm_grid(const std::filesystem::path &pgm);
void save_pgm_grid(const OccupancyGrid2D &grid, const std::filesystem::path &pgm);

} // namespace rcesdf
