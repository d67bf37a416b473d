#pragma once

#include <rcesdf/bspline.hpp>
#include <rcesdf/config.hpp>
#include <rcesdf/lbfgs.hpp>
#include <rcesdf/objective.hpp>
#include <rcesdf/scene.hpp>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rcesdf
{

/// Raised when the reference search finds no route.
class NoPathError : public Error
{
  public:
    using Error::Error;
};

/// 8-connected grid A* on the map dilated by `clearance`, followed by greedy
/// line-of-sight shortcutting. Returns world points from start to goal.
/// A cell is blocked when its center lies closer than `clearance` to an
/// occupied cell (center distance minus half a cell), or lies outside the
/// map. Diagonal moves may not cut blocked corners.
std::vector<Vec2> astar_path(const OccupancyGrid2D &map, const Vec2 &start, const Vec2 &goal, double clearance);

struct Allocation
{
    double knot_span = 0.0;
    int num_ctrl = 0;
    double duration = 0.0; ///< requested total time T
};

/// Target control-point spacing along the path, in field cells. Collision
/// is only evaluated at knots, so the spacing bounds how far a footprint
/// corner can travel unchecked between two of them.
inline constexpr double kControlSpacingCells = 1.0;

/// T = 1.5 L / v_max; the knot span gives control points about
/// kControlSpacingCells * rc_resolution apart at the mean speed; N_c = max(7, round(T / dt) + 3)
/// and dt is then adjusted so that (N_c - 3) dt = T.
Allocation allocate(std::span<const Vec2> path, const PlannerConfig &config);

double polyline_length(std::span<const Vec2> path);

/// Points along the polyline at arc-length spacing at most `spacing`,
/// always including every original vertex.
std::vector<Vec2> resample_path(std::span<const Vec2> path, double spacing);

/// Half-width in meters of the arc window over which seeded headings are
/// averaged.
inline constexpr double kHeadingWindow = 0.5;

/// Yaw per path point. Tangent seeding uses segment headings, unwrapped
/// from start_yaw and averaged over kHeadingWindow, blended linearly from start_yaw over the first 10% of
/// arc length and into goal_yaw (taken near the final heading) over the
/// last 10%. Constant seeding interpolates start to goal by arc length.
std::vector<SE2Pose> init_yaw(std::span<const Vec2> path, double start_yaw, double goal_yaw,
                              YawSeed seed = YawSeed::Tangent);

/// Read-only view of a trajectory for validation.
class TrajectoryView
{
  public:
    virtual ~TrajectoryView() = default;
    virtual double duration() const = 0;
    virtual TrajectoryState state(double t) const = 0;
    /// Upper bounds on speed and yaw rate over the whole trajectory.
    virtual RateBounds rate_bounds() const = 0;
};

class SplineView final : public TrajectoryView
{
  public:
    explicit SplineView(const BSplineSE2 &spline) : spline_(spline) {}
    double duration() const override { return spline_.duration(); }
    TrajectoryState state(double t) const override { return evaluate(spline_, t); }
    RateBounds rate_bounds() const override { return rcesdf::rate_bounds(spline_); }

  private:
    const BSplineSE2 &spline_;
};

/// Time-stamped samples, linearly interpolated between rows.
class SampledView final : public TrajectoryView
{
  public:
    explicit SampledView(std::vector<double> times, std::vector<TrajectoryState> states);
    double duration() const override { return times_.back() - times_.front(); }
    TrajectoryState state(double t) const override;
    RateBounds rate_bounds() const override;

  private:
    std::vector<double> times_;
    std::vector<TrajectoryState> states_;
};

struct LimitViolation
{
    std::string quantity;
    double max_observed = 0.0;
    double limit = 0.0;
};

struct CollisionReport
{
    bool collision_free = true;
    /// Smallest gap between the uninflated footprint and occupied cells
    /// over the sampled times, capped at kClearanceCap. Negative values
    /// give the depth of the deepest penetrating body sample.
    double min_clearance = 0.0;
    double worst_time = 0.0;
    int time_samples = 0;
    std::vector<LimitViolation> violated_limits;

    bool ok() const { return collision_free && violated_limits.empty(); }
};

inline constexpr double kClearanceCap = 1.0;
inline constexpr double kLimitTolerance = 1.05;

/// Samples 2^k + 1 uniform times, k the smallest exponent for which no body
/// point moves more than `density` between samples, so a finer density
/// visits a superset of times. Every footprint sample (interior and
/// boundary, spacing `density`) is tested against occupancy; leaving the
/// map counts as a collision. Limits are checked with 5% tolerance.
CollisionReport validate(const TrajectoryView &trajectory, const Scenario &scenario, double density);
CollisionReport validate(const TrajectoryView &trajectory, const Scenario &scenario, double density,
                         const Limits &limits);

/// Gap between the footprint at `pose` and the nearest occupied cell or map
/// edge, 0 on contact, capped at `cap`.
double footprint_clearance(const RobotShape &shape, const OccupancyGrid2D &grid, const SE2Pose &pose,
                           double cap = kClearanceCap);

enum class Method
{
    RcEsdf,
    Wbfp
};

const char *to_string(Method m);

struct PlanTimings
{
    double field_build = 0.0;
    double init = 0.0;
    double optimize = 0.0;
    double validate = 0.0;
};

struct PlanResult
{
    Method method = Method::RcEsdf;
    BSplineSE2 trajectory;
    BSplineSE2 initial;
    std::vector<Vec2> reference_path;
    SolveReport report;
    CostBreakdown final_cost;
    CollisionReport validation;
    PlanTimings timings;
    double length = 0.0;
    double mean_jerk = 0.0;
};

/// Full pipeline: collision field, A* reference (clearance half the
/// footprint's minimum width), yaw seeding, spline fit, L-BFGS, validation.
/// Propagates NoPathError; a trajectory that fails validation is returned
/// with validation.collision_free = false.
PlanResult plan(const Scenario &scenario, const PlannerConfig &config, Method method = Method::RcEsdf);
inline PlanResult plan(const Scenario &scenario, Method method = Method::RcEsdf)
{
    return plan(scenario, scenario.config, method);
}

/// Collision model used by plan() together with the data it references.
/// Only the members of the chosen method are populated. The point index
/// refers to scenario.cloud, so the scenario must outlive the setup.
struct CollisionSetup
{
    Method method = Method::RcEsdf;
    RcEsdf rc;
    std::unique_ptr<PointIndex> index;
    EnvEsdf env;
    BodySamples samples;
    std::unique_ptr<CollisionModel> model;
};
std::unique_ptr<CollisionSetup> make_collision_setup(const Scenario &scenario, const PlannerConfig &config,
                                                     Method method);

} // namespace rcesdf
