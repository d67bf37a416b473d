#include <rcesdf/scenarios.hpp>

#include <cmath>

namespace rcesdf
{

RobotShape make_lshape(double arm, double width)
{
    if (!(arm > width && width > 0.0))
        throw InvariantError("make_lshape: need arm > width > 0");
    const double c = 0.75 * width;
    return RobotShape{{Polygon2D({{-c, -c},
                                  {arm - c, -c},
                                  {arm - c, width - c},
                                  {width - c, width - c},
                                  {width - c, arm - c},
                                  {-c, arm - c}})}};
}

OccupancyGrid2D bordered_map(double size_x, double size_y, double resolution, double wall)
{
    OccupancyGrid2D g({0.0, 0.0}, resolution, static_cast<int>(std::lround(size_x / resolution)),
                      static_cast<int>(std::lround(size_y / resolution)));
    fill_box(g, {0.0, 0.0}, {size_x, wall});
    fill_box(g, {0.0, size_y - wall}, {size_x, size_y});
    fill_box(g, {0.0, 0.0}, {wall, size_y});
    fill_box(g, {size_x - wall, 0.0}, {size_x, size_y});
    return g;
}

void fill_box(OccupancyGrid2D &grid, const Vec2 &lo, const Vec2 &hi)
{
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
        {
            const Vec2 c = grid.cell_center(i, j);
            if (c.x() >= lo.x() && c.x() <= hi.x() && c.y() >= lo.y() && c.y() <= hi.y())
                grid.set(i, j, true);
        }
}

void wall_with_gaps(OccupancyGrid2D &grid, double x0, double x1, const std::vector<std::pair<double, double>> &gaps)
{
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
        {
            const Vec2 c = grid.cell_center(i, j);
            if (c.x() < x0 || c.x() > x1)
                continue;
            bool open = false;
            for (const auto &[lo, hi] : gaps)
                open = open || (c.y() > lo && c.y() < hi);
            if (!open)
                grid.set(i, j, true);
        }
}

Scenario finalize_scenario(Scenario s)
{
    s.map_source = MapSource::Grid;
    s.cloud = pointcloud_from_grid(s.grid);
    const double spacing = s.config.validator_density;
    if (!pose_collision_free(s.robot, s.grid, s.start, spacing))
        throw InvariantError("scenario: start pose is in collision (or leaves the map)");
    if (!pose_collision_free(s.robot, s.grid, s.goal, spacing))
        throw InvariantError("scenario: goal pose is in collision (or leaves the map)");
    return s;
}

namespace
{

Scenario two_wall_map(double gap, const RobotShape &robot)
{
    Scenario s;
    s.robot = robot;
    s.grid = bordered_map(17.0, 10.0, 0.1, 0.2);
    wall_with_gaps(s.grid, 5.5, 5.8, {{6.25 - 0.5 * gap, 6.25 + 0.5 * gap}});
    wall_with_gaps(s.grid, 11.2, 11.5, {{3.75 - 0.5 * gap, 3.75 + 0.5 * gap}});
    fill_box(s.grid, {8.0, 7.0}, {9.0, 8.0});
    fill_box(s.grid, {2.5, 0.2}, {3.5, 1.2});
    s.start = {{1.5, 3.0}, 0.0};
    s.goal = {{15.5, 7.0}, 0.0};
    return finalize_scenario(s);
}

} // namespace

Scenario rectangle_gaps_scenario() { return two_wall_map(1.5, make_rectangle(1.8, 1.2)); }

Scenario rectangle_narrow_gaps_scenario() { return two_wall_map(1.0, make_rectangle(1.8, 1.2)); }

Scenario slim_robot_scenario() { return two_wall_map(0.9, make_rectangle(1.2, 0.4)); }

Scenario lshape_gaps_scenario()
{
    Scenario s;
    s.robot = make_lshape(1.2, 0.4);
    s.grid = bordered_map(10.0, 6.0, 0.1, 0.2);
    wall_with_gaps(s.grid, 2.4, 2.7, {{4.3, 5.8}});
    wall_with_gaps(s.grid, 4.85, 5.15, {{0.2, 1.7}});
    wall_with_gaps(s.grid, 7.3, 7.6, {{4.3, 5.8}});
    s.start = {{1.0, 1.0}, 0.0};
    s.goal = {{8.8, 1.2}, M_PI / 2};
    return finalize_scenario(s);
}

Scenario size_scaling_scenario(const RobotShape &robot)
{
    Scenario s;
    s.robot = robot;
    s.grid = bordered_map(25.0, 18.0, 0.1, 0.2);
    wall_with_gaps(s.grid, 8.0, 8.4, {{11.9, 14.1}});
    wall_with_gaps(s.grid, 16.4, 16.8, {{3.9, 6.1}});
    fill_box(s.grid, {11.5, 8.5}, {13.0, 10.0});
    s.start = {{3.0, 4.0}, 0.0};
    s.goal = {{22.0, 14.0}, 0.0};
    return finalize_scenario(s);
}

Scenario open_field_scenario()
{
    Scenario s;
    s.robot = make_rectangle(1.8, 1.2);
    s.grid = bordered_map(12.0, 8.0, 0.1, 0.2);
    s.start = {{2.0, 4.0}, 0.0};
    s.goal = {{10.0, 4.0}, 0.0};
    return finalize_scenario(s);
}

std::vector<NamedScenario> builtin_scenarios()
{
    return {
        {"rectangle_gaps", rectangle_gaps_scenario()},
        {"rectangle_narrow_gaps", rectangle_narrow_gaps_scenario()},
        {"lshape_gaps", lshape_gaps_scenario()},
        {"slim_robot", slim_robot_scenario()},
        {"open_field", open_field_scenario()},
        {"size_small", size_scaling_scenario(make_rectangle(0.8, 0.4))},
        {"size_medium", size_scaling_scenario(make_rectangle(1.8, 1.2))},
        {"size_large", size_scaling_scenario(make_rectangle(3.6, 1.4))},
    };
}

} // namespace rcesdf
