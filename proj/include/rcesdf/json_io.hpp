#pragma once

#include <rcesdf/config.hpp>
#include <rcesdf/types.hpp>

#include <json.hpp>

namespace rcesdf
{

/// Missing keys keep their defaults; out-of-range values raise
/// InvariantError naming the key.
PlannerConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const PlannerConfig &config);

/// [x, y, yaw]
SE2Pose pose_from_json(const nlohmann::json &j, const char *what);
nlohmann::json pose_to_json(const SE2Pose &pose);

Vec2 vec_from_json(const nlohmann::json &j, const char *what);
nlohmann::json vec_to_json(const Vec2 &v);

} // namespace rcesdf
