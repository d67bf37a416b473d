#pragma once

// Dense-sampling baseline: a world-frame signed field queried at every body
// sample of the footprint, used for timing comparisons against the lazy
// body-frame evaluation.

#include <rcesdf/distance_field.hpp>
#include <rcesdf/rc_esdf.hpp>
#include <rcesdf/scene.hpp>

#include <vector>

namespace rcesdf
{

struct EnvEsdf
{
    ScalarField2D field; ///< InsideNegativeOutsidePositive, queried with OutOfBounds::Error
};

struct BodySamples
{
    std::vector<Vec2> points;
    double spacing = 0.0;
};

/// Signed field over `map` padded by `padding` meters of free space on each
/// side (rounded up to whole cells).
EnvEsdf build_env_esdf(const OccupancyGrid2D &map, double padding = 0.0, Exec exec = Exec::Parallel);

/// Footprint cell centers at `spacing`.
BodySamples make_body_samples(const RobotShape &shape, double spacing);

/// Hinge penalty sum_j (d_thr - d_j)^2 [d_j < d_thr] over world-transformed
/// body samples. `d` of the result holds sum_j (d_j - d_thr) over active
/// samples. Throws OutOfBoundsError naming the first sample outside the field.
CollisionEval wbfp_eval(const EnvEsdf &env, const BodySamples &samples, const SE2Pose &pose, double d_thr);

} // namespace rcesdf
