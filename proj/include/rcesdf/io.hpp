#pragma once

#include <rcesdf/distance_field.hpp>
#include <rcesdf/planner.hpp>

#include <json.hpp>

#include <iosfwd>

namespace rcesdf
{

/// Columns t, x, y, yaw, vx, vy, yaw_rate, ax, ay, yaw_acc sampled every
/// `dt` seconds; the final time is always included.
void write_trajectory_csv(std::ostream &out, const BSplineSE2 &spline, double dt = 0.02);

/// Parses the format above (header required). Throws ParseError with the
/// offending line number.
SampledView read_trajectory_csv(std::istream &in);

nlohmann::json control_points_json(const BSplineSE2 &spline);
nlohmann::json collision_report_json(const CollisionReport &report);
nlohmann::json solve_report_json(const SolveReport &report, bool include_trace);
nlohmann::json plan_result_json(const PlanResult &result, bool include_trace);

/// Map, reference path, trajectory and footprint outlines at the
/// constraint points.
void write_plan_svg(std::ostream &out, const Scenario &scenario, const PlanResult &result);

/// Heatmap of vertex values: blue for negative, white at zero, red for
/// positive, each side scaled to its own extreme.
void write_field_svg(std::ostream &out, const ScalarField2D &field);

} // namespace rcesdf
