#pragma once

#include <rcesdf/types.hpp>

#include <span>
#include <vector>

namespace rcesdf
{

/// Uniform cubic B-spline over (x, y, yaw). Segment s covers
/// [s dt, (s + 1) dt] and is shaped by control points s .. s + 3, so the
/// duration is (N_c - 3) dt.
class BSplineSE2
{
  public:
    static constexpr int kDegree = 3;
    static constexpr int kMinControlPoints = 2 * kDegree + 1;

    BSplineSE2() = default;
    BSplineSE2(double knot_span, std::vector<Vec2> positions, std::vector<double> yaws);

    int size() const { return static_cast<int>(positions_.size()); }
    double knot_span() const { return knot_span_; }
    double duration() const { return (size() - kDegree) * knot_span_; }
    std::span<const Vec2> positions() const { return positions_; }
    std::span<const double> yaws() const { return yaws_; }
    std::span<Vec2> positions() { return positions_; }
    std::span<double> yaws() { return yaws_; }

  private:
    double knot_span_ = 1.0;
    std::vector<Vec2> positions_;
    std::vector<double> yaws_;
};

/// Control points of the derivative curves (finite differences over dt).
struct DerivativeCtrl
{
    std::vector<Vec2> vel;   ///< N_c - 1
    std::vector<Vec2> acc;   ///< N_c - 2
    std::vector<Vec2> jerk;  ///< N_c - 3
    std::vector<double> yaw_vel;
    std::vector<double> yaw_acc;
    std::vector<double> yaw_jerk;
};

DerivativeCtrl derivative_ctrl(const BSplineSE2 &spline);

/// Number of constraint points (knot poses), N_c - 2.
inline int constraint_point_count(const BSplineSE2 &spline) { return spline.size() - 2; }

/// Knot pose k (0-based, 0 <= k <= N_c - 3): weights (1, 4, 1) / 6 over
/// control points k, k + 1, k + 2. Equals evaluate(spline, k dt).
SE2Pose constraint_point(const BSplineSE2 &spline, int k);

struct TrajectoryState
{
    SE2Pose pose;
    Vec2 vel{0.0, 0.0};
    Vec2 acc{0.0, 0.0};
    Vec2 jerk{0.0, 0.0};
    double yaw_rate = 0.0;
    double yaw_acc = 0.0;
    double yaw_jerk = 0.0;
};

/// Matrix-form evaluation with derivatives up to jerk. Throws Error for t
/// outside [0, duration] (a relative slack of 1e-12 is clamped).
TrajectoryState evaluate(const BSplineSE2 &spline, double t);

/// Seeds a spline from a pose path: the first and last three control
/// points repeat the start and goal; the rest sit at uniform arc length
/// along the path, yaw interpolated along the unwrapped path yaws.
BSplineSE2 fit_from_path(std::span<const SE2Pose> path, double knot_span, int num_ctrl);

/// Largest control-point speed and yaw rate; by the convex hull property
/// they bound the curve's speed and yaw rate everywhere.
struct RateBounds
{
    double speed = 0.0;
    double yaw_rate = 0.0;
};
RateBounds rate_bounds(const BSplineSE2 &spline);

} // namespace rcesdf
