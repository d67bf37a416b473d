#include <rcesdf/env_esdf.hpp>

#include <cmath>
#include <sstream>

namespace rcesdf
{

EnvEsdf build_env_esdf(const OccupancyGrid2D &map, double padding, Exec exec)
{
    const int pad = padding > 0.0 ? static_cast<int>(std::ceil(padding / map.resolution - 1e-9)) : 0;
    if (pad == 0)
        return {signed_field(map, SignConvention::InsideNegativeOutsidePositive, exec)};
    OccupancyGrid2D padded(map.origin - Vec2(pad * map.resolution, pad * map.resolution), map.resolution,
                           map.nx + 2 * pad, map.ny + 2 * pad);
    for (int j = 0; j < map.ny; ++j)
        for (int i = 0; i < map.nx; ++i)
            padded.set(i + pad, j + pad, map.occupied(i, j));
    return {signed_field(padded, SignConvention::InsideNegativeOutsidePositive, exec)};
}

BodySamples make_body_samples(const RobotShape &shape, double spacing)
{
    return {footprint_samples(shape, spacing, false), spacing};
}

CollisionEval wbfp_eval(const EnvEsdf &env, const BodySamples &samples, const SE2Pose &pose, double d_thr)
{
    const Mat2 r = rotation(pose.yaw);
    const Mat2 dr = rotation_derivative(pose.yaw);
    const Aabb bounds = env.field.bounds();
    CollisionEval e;
    for (std::size_t k = 0; k < samples.points.size(); ++k)
    {
        const Vec2 &s = samples.points[k];
        const Vec2 w = r * s + pose.p;
        if (!bounds.contains(w))
        {
            std::ostringstream msg;
            msg << "wbfp_eval: body sample " << k << " at world (" << w.x() << ", " << w.y()
                << ") is outside the environment field; build a larger field";
            throw OutOfBoundsError(msg.str());
        }
        const auto vg = interpolate_with_gradient(env.field, w, OutOfBounds::Error);
        const double gap = d_thr - vg.value;
        if (!(gap > 0.0))
            continue;
        e.d -= gap;
        e.cost += gap * gap;
        const Vec2 g = -2.0 * gap * vg.gradient;
        e.grad_p += g;
        e.grad_yaw += g.dot(dr * s);
        ++e.samples;
    }
    return e;
}

} // namespace rcesdf
