#pragma once

// Reconstructed test environments. Obstacle layouts follow the stated map
// sizes and robot dimensions; gap placement is our own.

#include <rcesdf/scene.hpp>

#include <string>
#include <vector>

namespace rcesdf
{

/// L-shaped footprint with both arms `arm` long and `width` wide, corner
/// region around the body origin.
RobotShape make_lshape(double arm, double width);

/// Empty map of nx x ny cells with a border wall `wall` meters thick.
OccupancyGrid2D bordered_map(double size_x, double size_y, double resolution, double wall);

/// Marks every cell whose center lies in the axis-aligned box.
void fill_box(OccupancyGrid2D &grid, const Vec2 &lo, const Vec2 &hi);

/// Vertical wall at x in [x0, x1] spanning the map height except for the
/// given openings [y_lo, y_hi].
void wall_with_gaps(OccupancyGrid2D &grid, double x0, double x1, const std::vector<std::pair<double, double>> &gaps);

/// Populates the cloud from the grid and checks both end poses.
Scenario finalize_scenario(Scenario s);

/// 17 x 10 m map, two walls with 1.5 m openings, 1.8 x 1.2 m rectangle.
Scenario rectangle_gaps_scenario();

/// Same layout with 1.0 m openings: narrower than the rectangle's 1.2 m
/// minimum width, so no posture fits through.
Scenario rectangle_narrow_gaps_scenario();

/// 10 x 6 m map with three staggered walls, 1.2 m L-shape (0.4 m arms).
Scenario lshape_gaps_scenario();

/// 25 x 18 m map with 2.2 m openings for the size sweep.
Scenario size_scaling_scenario(const RobotShape &robot);

/// Obstacle-free 12 x 8 m room.
Scenario open_field_scenario();

/// 1.2 x 0.4 m rectangle through 0.9 m openings.
Scenario slim_robot_scenario();

struct NamedScenario
{
    std::string name;
    Scenario scenario;
};
std::vector<NamedScenario> builtin_scenarios();

} // namespace rcesdf
