#pragma once

#include <rcesdf/bspline.hpp>
#include <rcesdf/config.hpp>
#include <rcesdf/env_esdf.hpp>
#include <rcesdf/rc_esdf.hpp>

#include <span>
#include <vector>

namespace rcesdf
{

/// Number of fixed control points at each end of the spline. Three
/// repeated points pin position with zero velocity and acceleration.
inline constexpr int kFixedControlPoints = 3;

inline int free_control_points(int num_ctrl) { return num_ctrl - 2 * kFixedControlPoints; }

/// Gradient over all control points of a spline.
struct ControlGradient
{
    std::vector<Vec2> q;
    std::vector<double> yaw;

    explicit ControlGradient(int n = 0) : q(n, Vec2::Zero()), yaw(n, 0.0) {}
};

/// Position and yaw parts of a term pair; grad.q differentiates the
/// position part, grad.yaw the yaw part.
struct TermPair
{
    double position = 0.0;
    double yaw = 0.0;
    ControlGradient grad;
};

struct CollisionTerm
{
    double value = 0.0;
    ControlGradient grad;
    std::size_t penetrating = 0; ///< summed sample counts over constraint points
};

/// Pose-level collision cost. Implementations must be safe to call
/// concurrently.
class CollisionModel
{
  public:
    virtual ~CollisionModel() = default;
    virtual CollisionEval evaluate(const SE2Pose &pose) const = 0;
};

class RcCollisionModel final : public CollisionModel
{
  public:
    RcCollisionModel(const RcEsdf &rc, const PointIndex &index) : rc_(rc), index_(index) {}
    CollisionEval evaluate(const SE2Pose &pose) const override { return collision_eval(rc_, pose, index_); }

  private:
    const RcEsdf &rc_;
    const PointIndex &index_;
};

class WbfpCollisionModel final : public CollisionModel
{
  public:
    WbfpCollisionModel(const EnvEsdf &env, const BodySamples &samples, double d_thr)
        : env_(env), samples_(samples), d_thr_(d_thr)
    {
    }
    CollisionEval evaluate(const SE2Pose &pose) const override { return wbfp_eval(env_, samples_, pose, d_thr_); }

  private:
    const EnvEsdf &env_;
    const BodySamples &samples_;
    double d_thr_;
};

/// Sum of squared acceleration and jerk control points, per channel.
TermPair smoothness(const BSplineSE2 &spline);

/// Over-limit penalty on velocity and acceleration control points.
TermPair feasibility(const BSplineSE2 &spline, const Limits &limits,
                     FeasibilityPenalty shape = FeasibilityPenalty::Hinge);

/// Collision cost summed over the N_c - 2 constraint points; gradient
/// distributed with weights (1, 4, 1) / 6 and zeroed on fixed control
/// points. The parallel path evaluates constraint points concurrently and
/// reduces in index order, so both modes agree bit for bit.
CollisionTerm collision(const BSplineSE2 &spline, const CollisionModel &model, Exec exec = Exec::Parallel);

struct CostBreakdown
{
    double total = 0.0;
    double position_smooth = 0.0;
    double position_feasible = 0.0;
    double yaw_smooth = 0.0;
    double yaw_feasible = 0.0;
    double collision = 0.0;
    /// Layout [x_0 .. x_{m-1}, y_0 .. y_{m-1}, yaw_0 .. yaw_{m-1}] over the
    /// m = N_c - 6 free control points.
    std::vector<double> gradient;
};

CostBreakdown total_cost(const BSplineSE2 &spline, const PenaltyWeights &weights, const Limits &limits,
                         const CollisionModel &model, FeasibilityPenalty shape = FeasibilityPenalty::Hinge,
                         Exec exec = Exec::Parallel);

/// Free control points in the gradient layout.
std::vector<double> pack_free(const BSplineSE2 &spline);
void unpack_free(std::span<const double> x, BSplineSE2 &spline);
std::vector<double> pack_gradient(const ControlGradient &g);

/// Mean jerk magnitude over `samples` uniform times.
double mean_jerk(const BSplineSE2 &spline, int samples = 200);
double path_length(const BSplineSE2 &spline, int samples = 400);

} // namespace rcesdf
