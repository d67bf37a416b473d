#pragma once

#include <rcesdf/distance_field.hpp>
#include <rcesdf/scene.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace rcesdf
{

/// Body-frame signed field of the inflated footprint: negative inside, zero
/// on and outside the boundary, queried with the OutsideZero policy.
struct RcEsdf
{
    ScalarField2D field;
    Aabb bounds; ///< body-frame extent of the field
    double inflation = 0.0;
};

/// An obstacle point penetrating the footprint at some pose.
struct CollisionSample
{
    std::size_t index = 0; ///< position of the point in the cloud
    Vec2 q_w{0.0, 0.0};
    Vec2 q_b{0.0, 0.0};
    double value = 0.0;      ///< field value at q_b, < 0
    Vec2 grad_b{0.0, 0.0};   ///< field gradient at q_b (body frame)
};

/// Collision cost of one pose: cost = d^2 with d the summed field values of
/// the penetrating points; gradients with respect to position and yaw.
struct CollisionEval
{
    double d = 0.0;
    double cost = 0.0;
    Vec2 grad_p{0.0, 0.0};
    double grad_yaw = 0.0;
    std::size_t samples = 0;
};

RcEsdf build_rc_esdf(const RobotShape &shape, double resolution, double inflation, Exec exec = Exec::Parallel);

/// World AABB of the field bounds at `pose`.
Aabb world_aabb(const RcEsdf &rc, const SE2Pose &pose);

/// Uniform bucket grid over a point cloud for rectangle queries. Keeps a
/// reference to the cloud; the cloud must outlive the index.
class PointIndex
{
  public:
    explicit PointIndex(const PointCloud2D &cloud, double bucket_size = 0.5);

    const PointCloud2D &cloud() const { return *cloud_; }

    /// Calls fn(index, point) for every point inside the closed box.
    /// Visiting order is bucket order, not cloud order.
    template <class Fn> void query(const Aabb &box, Fn &&fn) const
    {
        if (cloud_->points.empty())
            return;
        const int i0 = std::max(0, bucket_coord(box.min.x(), origin_.x()));
        const int j0 = std::max(0, bucket_coord(box.min.y(), origin_.y()));
        const int i1 = std::min(nx_ - 1, bucket_coord(box.max.x(), origin_.x()));
        const int j1 = std::min(ny_ - 1, bucket_coord(box.max.y(), origin_.y()));
        for (int j = j0; j <= j1; ++j)
            for (int i = i0; i <= i1; ++i)
            {
                const std::size_t b = static_cast<std::size_t>(j) * nx_ + i;
                for (std::size_t k = starts_[b]; k < starts_[b + 1]; ++k)
                {
                    const std::size_t idx = order_[k];
                    const Vec2 &q = cloud_->points[idx];
                    if (box.contains(q))
                        fn(idx, q);
                }
            }
    }

  private:
    int bucket_coord(double v, double o) const
    {
        const double c = std::floor((v - o) / bucket_);
        return static_cast<int>(std::clamp(c, -1.0, 1e9));
    }

    const PointCloud2D *cloud_;
    double bucket_;
    Vec2 origin_{0.0, 0.0};
    int nx_ = 1;
    int ny_ = 1;
    std::vector<std::size_t> starts_;
    std::vector<std::size_t> order_;
};

/// Lazy collection: only points inside the world AABB are transformed and
/// interpolated; points with value < 0 are kept. Sorted by cloud index.
std::vector<CollisionSample> collect_collision_points(const RcEsdf &rc, const SE2Pose &pose, const PointIndex &index);

/// Reference collection scanning every cloud point without the AABB filter.
std::vector<CollisionSample> collect_collision_points_exhaustive(const RcEsdf &rc, const SE2Pose &pose,
                                                                 const PointCloud2D &cloud);

/// Per-point pose derivatives of a field value H at world point q_w:
/// dH/dp = -R g_b and dH/dyaw = (q_w - p)^T dR^T/dyaw^T g_b.
struct PoseDerivative
{
    Vec2 d_p{0.0, 0.0};
    double d_yaw = 0.0;
};
PoseDerivative sample_pose_derivative(const Vec2 &q_w, const SE2Pose &pose, const Vec2 &grad_b);

/// Sums samples in the given order into a CollisionEval.
CollisionEval accumulate_collision(const std::vector<CollisionSample> &samples, const SE2Pose &pose);

/// Lazy evaluation through the point index.
CollisionEval collision_eval(const RcEsdf &rc, const SE2Pose &pose, const PointIndex &index);

/// Exhaustive evaluation; bit-identical to collision_eval.
CollisionEval collision_eval_exhaustive(const RcEsdf &rc, const SE2Pose &pose, const PointCloud2D &cloud);

} // namespace rcesdf
