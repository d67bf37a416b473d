#include <rcesdf/rc_esdf.hpp>

#include <algorithm>
#include <cmath>

namespace rcesdf
{

RcEsdf build_rc_esdf(const RobotShape &shape, double resolution, double inflation, Exec exec)
{
    const auto grid = rasterize_shape(shape, resolution, inflation);
    if (grid.occupied_count() == 0)
        throw InvariantError("build_rc_esdf: footprint rasterizes to no occupied cell at resolution " +
                             std::to_string(resolution));
    RcEsdf rc;
    rc.field = signed_field(grid, SignConvention::InsideNegativeOutsideZero, exec);
    rc.bounds = rc.field.bounds();
    rc.inflation = inflation;
    return rc;
}

Aabb world_aabb(const RcEsdf &rc, const SE2Pose &pose)
{
    const Mat2 r = rotation(pose.yaw);
    const Vec2 corners[4] = {rc.bounds.min,
                             {rc.bounds.max.x(), rc.bounds.min.y()},
                             rc.bounds.max,
                             {rc.bounds.min.x(), rc.bounds.max.y()}};
    Aabb box{r * corners[0] + pose.p, r * corners[0] + pose.p};
    for (const auto &c : corners)
    {
        const Vec2 w = r * c + pose.p;
        box.min = box.min.cwiseMin(w);
        box.max = box.max.cwiseMax(w);
    }
    return box;
}

PointIndex::PointIndex(const PointCloud2D &cloud, double bucket_size) : cloud_(&cloud), bucket_(bucket_size)
{
    if (!(bucket_ > 0.0))
        throw InvariantError("PointIndex: bucket size must be positive");
    const auto &pts = cloud.points;
    if (pts.empty())
    {
        starts_.assign(2, 0);
        return;
    }
    Vec2 lo = pts.front(), hi = pts.front();
    for (const auto &p : pts)
    {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    origin_ = lo;
    nx_ = bucket_coord(hi.x(), lo.x()) + 1;
    ny_ = bucket_coord(hi.y(), lo.y()) + 1;
    const std::size_t nb = static_cast<std::size_t>(nx_) * ny_;
    std::vector<std::size_t> bucket_of(pts.size());
    starts_.assign(nb + 1, 0);
    for (std::size_t k = 0; k < pts.size(); ++k)
    {
        const int i = std::min(nx_ - 1, bucket_coord(pts[k].x(), lo.x()));
        const int j = std::min(ny_ - 1, bucket_coord(pts[k].y(), lo.y()));
        bucket_of[k] = static_cast<std::size_t>(j) * nx_ + i;
        ++starts_[bucket_of[k] + 1];
    }
    for (std::size_t b = 0; b < nb; ++b)
        starts_[b + 1] += starts_[b];
    order_.resize(pts.size());
    std::vector<std::size_t> fill(starts_.begin(), starts_.end() - 1);
    for (std::size_t k = 0; k < pts.size(); ++k)
        order_[fill[bucket_of[k]]++] = k;
}

namespace
{

bool probe(const RcEsdf &rc, const Mat2 &rt, const SE2Pose &pose, std::size_t idx, const Vec2 &q_w,
           CollisionSample &out)
{
    const Vec2 q_b = rt * (q_w - pose.p);
    const auto vg = interpolate_with_gradient(rc.field, q_b, OutOfBounds::Zero);
    if (!(vg.value < 0.0))
        return false;
    out = {idx, q_w, q_b, vg.value, vg.gradient};
    return true;
}

} // namespace

std::vector<CollisionSample> collect_collision_points(const RcEsdf &rc, const SE2Pose &pose, const PointIndex &index)
{
    std::vector<CollisionSample> out;
    const Mat2 rt = rotation(pose.yaw).transpose();
    CollisionSample s;
    index.query(world_aabb(rc, pose), [&](std::size_t idx, const Vec2 &q) {
        if (probe(rc, rt, pose, idx, q, s))
            out.push_back(s);
    });
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.index < b.index; });
    return out;
}

std::vector<CollisionSample> collect_collision_points_exhaustive(const RcEsdf &rc, const SE2Pose &pose,
                                                                 const PointCloud2D &cloud)
{
    std::vector<CollisionSample> out;
    const Mat2 rt = rotation(pose.yaw).transpose();
    CollisionSample s;
    for (std::size_t k = 0; k < cloud.points.size(); ++k)
        if (probe(rc, rt, pose, k, cloud.points[k], s))
            out.push_back(s);
    return out;
}

PoseDerivative sample_pose_derivative(const Vec2 &q_w, const SE2Pose &pose, const Vec2 &grad_b)
{
    const double c = std::cos(pose.yaw), s = std::sin(pose.yaw);
    PoseDerivative d;
    d.d_p = -(rotation(pose.yaw) * grad_b);
    Mat2 m;
    m << -s, -c, c, -s;
    d.d_yaw = (q_w - pose.p).dot(m * grad_b);
    return d;
}

CollisionEval accumulate_collision(const std::vector<CollisionSample> &samples, const SE2Pose &pose)
{
    CollisionEval e;
    Vec2 sum_p(0.0, 0.0);
    double sum_yaw = 0.0;
    for (const auto &s : samples)
    {
        e.d += s.value;
        const auto pd = sample_pose_derivative(s.q_w, pose, s.grad_b);
        sum_p += pd.d_p;
        sum_yaw += pd.d_yaw;
    }
    e.samples = samples.size();
    e.cost = e.d * e.d;
    e.grad_p = 2.0 * e.d * sum_p;
    e.grad_yaw = 2.0 * e.d * sum_yaw;
    return e;
}

CollisionEval collision_eval(const RcEsdf &rc, const SE2Pose &pose, const PointIndex &index)
{
    // Scratch reused per thread; evaluation is on the optimizer's hot path.
    thread_local std::vector<CollisionSample> scratch;
    scratch.clear();
    const Mat2 rt = rotation(pose.yaw).transpose();
    CollisionSample s;
    index.query(world_aabb(rc, pose), [&](std::size_t idx, const Vec2 &q) {
        if (probe(rc, rt, pose, idx, q, s))
            scratch.push_back(s);
    });
    if (scratch.empty())
        return {};
    std::sort(scratch.begin(), scratch.end(), [](const auto &a, const auto &b) { return a.index < b.index; });
    return accumulate_collision(scratch, pose);
}

CollisionEval collision_eval_exhaustive(const RcEsdf &rc, const SE2Pose &pose, const PointCloud2D &cloud)
{
    return accumulate_collision(collect_collision_points_exhaustive(rc, pose, cloud), pose);
}

} // namespace rcesdf
